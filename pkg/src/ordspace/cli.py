"""Command-line front end.

Subcommands fall into three groups: group arithmetic on parsed element
expressions (mul, inv, conj), oracle queries against a descriptor file
(sign, cmp, arch, arch-cmp), and descriptor/space operations (validate,
enumerate, reference, certificate, witness, ok-test, cb-model, verify).

Exit codes: 0 success, 1 domain error, 2 usage error, 3 property-suite
failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence

from . import descriptor as descriptor_mod
from .descriptor import (
    OrderDescriptor,
    descriptor_to_json_dict,
    enumerate_descriptors,
    load_descriptor,
    reference_descriptor,
    validate,
)
from .errors import OrdspaceError
from .exact import DEFAULT_PRECISION_CEILING
from .group import conjugate, first_primes, invert, multiply
from .oracle import arch_class, arch_compare, compare, sign_of
from .parser import format_element, parse_element
from .topology import (
    cb_model,
    certificate_from_json,
    certificate_to_json,
    in_ok,
    isolation_certificate,
    limit_witness,
)
from .verify import run_all_checks

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2
EXIT_SUITE = 3


def _is_prime(value: int) -> bool:
    if value < 2:
        return False
    probe = 2
    while probe * probe <= value:
        if value % probe == 0:
            return False
        probe += 1
    return True


@dataclass
class Config:
    """Resolved invocation configuration."""

    n: int
    primes: Sequence[int]
    offset_bound: int = 2
    precision_ceiling: int = DEFAULT_PRECISION_CEILING
    sample_count: int = 200
    rng_seed: int = 0
    output_format: str = "text"

    def __post_init__(self):
        if self.n < 2:
            raise OrdspaceError(f"arity must be at least 2, got {self.n}")
        if len(self.primes) != self.n:
            raise OrdspaceError(
                f"need exactly {self.n} primes, got {len(self.primes)}"
            )
        if len(set(self.primes)) != len(self.primes):
            raise OrdspaceError("primes must be distinct")
        for p in self.primes:
            if not _is_prime(p):
                raise OrdspaceError(f"{p} is not prime")
        if self.offset_bound < 0:
            raise OrdspaceError("offset bound must be nonnegative")
        if self.sample_count < 0:
            raise OrdspaceError("sample count must be nonnegative")
        if self.precision_ceiling < 64:
            raise OrdspaceError("precision ceiling must be at least 64 bits")


def _common_flags(parser: argparse.ArgumentParser, descriptor: bool, arity: bool):
    if descriptor:
        parser.add_argument(
            "-d", "--descriptor", required=True, metavar="FILE",
            help="descriptor JSON file",
        )
    if arity:
        parser.add_argument("-n", "--arity", type=int, required=True)
    parser.add_argument(
        "--primes", default=None,
        help="comma-separated primes, one per family (default: first n primes)",
    )
    parser.add_argument(
        "--precision-ceiling", type=int, default=DEFAULT_PRECISION_CEILING,
        help="hard bit ceiling for sign refinement",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ordspace",
        description="Exact order computation in the groups G(n) and the"
        " topology of their spaces of orders.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, helptext in (
        ("mul", "multiply element expressions left to right"),
        ("inv", "invert an element expression"),
        ("conj", "conjugate: with -e G -e K, compute K^-1 * G * K"),
    ):
        p = sub.add_parser(name, help=helptext)
        _common_flags(p, descriptor=False, arity=True)
        p.add_argument("-e", "--element", action="append", required=True, metavar="EXPR")

    for name, helptext in (
        ("sign", "sign of each element under the descriptor's order"),
        ("cmp", "compare two elements under the descriptor's order"),
        ("arch", "Archimedean class of each element"),
        ("arch-cmp", "Archimedean comparison of two elements"),
    ):
        p = sub.add_parser(name, help=helptext)
        _common_flags(p, descriptor=True, arity=False)
        p.add_argument("-e", "--element", action="append", required=True, metavar="EXPR")

    p = sub.add_parser("validate", help="validate a descriptor file")
    _common_flags(p, descriptor=True, arity=False)

    p = sub.add_parser("enumerate", help="stream every descriptor with bounded offsets")
    _common_flags(p, descriptor=False, arity=True)
    p.add_argument("-B", "--offset-bound", type=int, default=0)

    p = sub.add_parser("reference", help="the built-in layered-order descriptor")
    _common_flags(p, descriptor=False, arity=True)

    p = sub.add_parser("certificate", help="isolation certificate of a fully mixed descriptor")
    _common_flags(p, descriptor=True, arity=False)

    p = sub.add_parser("witness", help="more-mixed descriptors agreeing with a certificate")
    _common_flags(p, descriptor=True, arity=False)
    p.add_argument("-c", "--certificate", required=True, metavar="FILE")
    p.add_argument("--count", type=int, default=5)

    p = sub.add_parser("ok-test", help="membership in the canonical positive stratum O_k")
    _common_flags(p, descriptor=True, arity=False)
    p.add_argument("-k", type=int, required=True)

    p = sub.add_parser("cb-model", help="run the rank model of the space of orders")
    _common_flags(p, descriptor=False, arity=True)

    p = sub.add_parser("verify", help="run the full property suite")
    _common_flags(p, descriptor=False, arity=True)
    p.add_argument("-B", "--offset-bound", type=int, default=2)
    p.add_argument("--samples", type=int, default=200)

    return parser


def _resolve_config(args, n: int) -> Config:
    if args.primes is None:
        primes = first_primes(n)
    else:
        try:
            primes = tuple(int(part) for part in args.primes.split(","))
        except ValueError as exc:
            raise OrdspaceError(f"malformed primes list: {args.primes}") from exc
    return Config(
        n=n,
        primes=primes,
        offset_bound=getattr(args, "offset_bound", 2),
        precision_ceiling=args.precision_ceiling,
        sample_count=getattr(args, "samples", 200),
        rng_seed=args.seed,
        output_format=args.format,
    )


def _load_descriptor_file(path: str) -> OrderDescriptor:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return load_descriptor(handle.read())
    except OSError as exc:
        raise OrdspaceError(f"cannot read descriptor file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise OrdspaceError(f"descriptor file is not valid JSON: {exc}") from exc


def _emit(args, payload, text_lines: List[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, separators=(",", ":")))
    else:
        for line in text_lines:
            print(line)


def _run_group_command(args) -> int:
    config = _resolve_config(args, args.arity)
    elements = [parse_element(expr, config.n, config.primes) for expr in args.element]
    if args.command == "mul":
        result = elements[0]
        for g in elements[1:]:
            result = multiply(result, g, config.primes)
    elif args.command == "inv":
        if len(elements) != 1:
            raise OrdspaceError("inv takes exactly one -e expression")
        result = invert(elements[0], config.primes)
    else:
        if len(elements) != 2:
            raise OrdspaceError("conj takes exactly two -e expressions (element, conjugator)")
        result = conjugate(elements[0], elements[1], config.primes)
    text = format_element(result)
    _emit(args, {"element": text}, [text])
    return EXIT_OK


def _run_oracle_command(args) -> int:
    d = _load_descriptor_file(args.descriptor)
    config = _resolve_config(args, d.n)
    elements = [parse_element(expr, d.n, config.primes) for expr in args.element]
    ceiling = config.precision_ceiling
    if args.command == "sign":
        signs = [int(sign_of(d, g, config.primes, ceiling)) for g in elements]
        _emit(
            args,
            {"results": [
                {"element": expr, "sign": s} for expr, s in zip(args.element, signs)
            ]},
            [str(s) for s in signs],
        )
        return EXIT_OK
    if args.command == "cmp":
        if len(elements) != 2:
            raise OrdspaceError("cmp takes exactly two -e expressions")
        verdict = compare(d, elements[0], elements[1], config.primes, ceiling).value
        _emit(args, {"comparison": verdict}, [verdict])
        return EXIT_OK
    if args.command == "arch":
        classes = [str(arch_class(d, g, config.primes)) for g in elements]
        _emit(
            args,
            {"results": [
                {"element": expr, "class": c} for expr, c in zip(args.element, classes)
            ]},
            classes,
        )
        return EXIT_OK
    if len(elements) != 2:
        raise OrdspaceError("arch-cmp takes exactly two -e expressions")
    verdict = arch_compare(d, elements[0], elements[1], config.primes).value
    _emit(args, {"comparison": verdict}, [verdict])
    return EXIT_OK


def _run_space_command(args) -> int:
    if args.command == "validate":
        try:
            with open(args.descriptor, "r", encoding="utf-8") as handle:
                raw = json.loads(handle.read())
        except (OSError, json.JSONDecodeError) as exc:
            raise OrdspaceError(f"cannot read descriptor file: {exc}") from exc
        try:
            descriptor_mod.descriptor_from_json_dict(raw)
        except OrdspaceError as exc:
            _emit(args, {"ok": False, "violation": str(exc)}, [f"violation: {exc}"])
            return EXIT_DOMAIN
        _emit(args, {"ok": True}, ["ok"])
        return EXIT_OK

    if args.command == "enumerate":
        config = _resolve_config(args, args.arity)
        stream = enumerate_descriptors(config.n, config.offset_bound)
        if args.format == "json":
            payload = [descriptor_to_json_dict(d) for d in stream]
            print(json.dumps({"count": len(payload), "descriptors": payload}))
        else:
            for d in stream:
                print(descriptor_mod.dump_descriptor(d))
        return EXIT_OK

    if args.command == "reference":
        config = _resolve_config(args, args.arity)
        d = reference_descriptor(config.n)
        _emit(args, descriptor_to_json_dict(d), [descriptor_mod.dump_descriptor(d)])
        return EXIT_OK

    if args.command == "certificate":
        d = _load_descriptor_file(args.descriptor)
        config = _resolve_config(args, d.n)
        certificate = isolation_certificate(d, config.primes)
        text = certificate_to_json(certificate)
        _emit(args, json.loads(text), [text])
        return EXIT_OK

    if args.command == "witness":
        d = _load_descriptor_file(args.descriptor)
        config = _resolve_config(args, d.n)
        try:
            with open(args.certificate, "r", encoding="utf-8") as handle:
                certificate = certificate_from_json(handle.read(), d.n, config.primes)
        except OSError as exc:
            raise OrdspaceError(f"cannot read certificate file: {exc}") from exc
        witnesses = limit_witness(d, certificate, args.count, config.primes)
        if args.format == "json":
            print(json.dumps({"witnesses": [descriptor_to_json_dict(w) for w in witnesses]}))
        else:
            for w in witnesses:
                print(descriptor_mod.dump_descriptor(w))
        return EXIT_OK

    if args.command == "ok-test":
        d = _load_descriptor_file(args.descriptor)
        verdict = in_ok(d, args.k)
        _emit(args, {"in_ok": verdict, "k": args.k}, ["true" if verdict else "false"])
        return EXIT_OK

    if args.command == "cb-model":
        config = _resolve_config(args, args.arity)
        report = cb_model(config.n)
        payload = report.to_json_dict()
        lines = [f"spaceRank {report.space_rank}", f"shapeCount {len(report.shape_ranks)}"]
        for blocks, rank in report.partition_ranks:
            label = " | ".join(",".join(map(str, block)) for block in blocks)
            lines.append(f"rank {rank}  partition {label}")
        _emit(args, payload, lines)
        return EXIT_OK

    raise OrdspaceError(f"unknown command {args.command}")


def _run_verify(args) -> int:
    config = _resolve_config(args, args.arity)
    results = run_all_checks(
        n=config.n,
        offset_bound=config.offset_bound,
        samples=config.sample_count,
        seed=config.rng_seed,
        primes=config.primes,
    )
    if args.format == "json":
        print(
            json.dumps(
                [
                    {
                        "name": r.name,
                        "passed": r.passed,
                        "cases": r.cases,
                        "seconds": round(r.seconds, 3),
                        "failures": r.failures,
                    }
                    for r in results
                ]
            )
        )
    else:
        width = max(len(r.name) for r in results)
        for r in results:
            status = "pass" if r.passed else "FAIL"
            print(f"{r.name:<{width}}  {status}  cases={r.cases}  {r.seconds:.2f}s")
            for failure in r.failures:
                print(f"{'':<{width}}  ! {failure}")
    return EXIT_OK if all(r.passed for r in results) else EXIT_SUITE


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        if args.command in ("mul", "inv", "conj"):
            return _run_group_command(args)
        if args.command in ("sign", "cmp", "arch", "arch-cmp"):
            return _run_oracle_command(args)
        if args.command == "verify":
            return _run_verify(args)
        return _run_space_command(args)
    except OrdspaceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
