"""Command-line front end.

Machine output (JSON or CSV) goes to stdout with sorted keys and no
timestamps, so fixed inputs produce byte-identical output; human-readable
progress and summaries go to stderr.  Exit codes: 0 success, 1 malformed
input, 2 internal disagreement from ``verify``, 3 search space over the cap.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from importlib import resources
from typing import Optional, Sequence

from . import oracle, pq, twodim, vector
from .errors import ParkfnError, SearchSpaceTooLarge
from .oracle import FamilySpec

EXIT_OK = 0
EXIT_BAD_INPUT = 1
EXIT_DISAGREEMENT = 2
EXIT_TOO_LARGE = 3

SUITE_NAMES = ("classical", "vector-arith", "pq-small", "affine-2d")


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True, separators=(",", ":")))


def _parse_int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(part) for part in text.split(","))


def _read_instance(args) -> dict:
    if args.file:
        with open(args.file, "r", encoding="utf-8") as fh:
            return json.load(fh)
    return json.load(sys.stdin)


def _classical_boundary(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def _resolve_cap(args) -> Optional[int]:
    if getattr(args, "cap", None) is not None:
        return args.cap
    env = os.environ.get("PARKFN_SEARCH_CAP")
    return int(env) if env else None


def _weights_from_args(args, data: Optional[dict] = None) -> twodim.WeightMatrix:
    """Weight grid from --affine/--matrix-file flags or from instance JSON."""
    if data is not None and "U" in data:
        return twodim.WeightMatrix.from_json_dict(data["U"])
    if data is not None and "affine" in data:
        return twodim.affine_weight_matrix(twodim.AffineWeightSpec.from_json_dict(data["affine"]))
    if args.matrix_file:
        with open(args.matrix_file, "r", encoding="utf-8") as fh:
            return twodim.WeightMatrix.from_json_dict(json.load(fh))
    if args.affine:
        coeffs = _parse_int_list(args.affine)
        if len(coeffs) != 6:
            raise ValueError("--affine needs six integers a,b,c,d,s,t")
        if args.p is None or args.q is None:
            raise ValueError("--affine also needs --p and --q")
        return twodim.affine_weight_matrix(twodim.AffineWeightSpec(*coeffs, args.p, args.q))
    raise ValueError("twodim family needs --affine with --p/--q, --matrix-file, or an embedded grid")


def _affine_spec_from_args(args) -> twodim.AffineWeightSpec:
    coeffs = _parse_int_list(args.affine or "")
    if len(coeffs) != 6 or args.p is None or args.q is None:
        raise ValueError("formula counts for twodim need --affine a,b,c,d,s,t plus --p and --q")
    return twodim.AffineWeightSpec(*coeffs, args.p, args.q)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def _cmd_check(args) -> int:
    data = _read_instance(args)
    if args.family in ("classical", "vector"):
        a = tuple(data["a"])
        u = _classical_boundary(len(a)) if args.family == "classical" else tuple(data["u"])
        out: dict = {"member": vector.is_vector_pf(a, u), "prime": vector.is_prime_vector_pf(a, u)}
    elif args.family == "pq":
        pair = pq.PQPair.from_json_dict(data)
        out = {"member": pq.is_pq_pf(pair), "prime": pq.is_pq_prime(pair)}
    else:
        weights = _weights_from_args(args, data)
        a, b = tuple(data["a"]), tuple(data["b"])
        member, witness = twodim.is_u_pf(a, b, weights)
        out = {"member": member}
        if weights.p >= 1 and weights.q >= 1:
            out["prime"] = twodim.is_u_prime(a, b, weights, method="direct")
        else:
            out["prime"] = None
        if witness is not None:
            out["witness"] = witness.path.steps
    _emit(out)
    return EXIT_OK


def _cmd_simulate(args) -> int:
    if args.family not in ("classical", "vector"):
        raise ValueError("simulate supports the classical and vector families")
    data = _read_instance(args)
    a = tuple(data["a"])
    u = _classical_boundary(len(a)) if args.family == "classical" else tuple(data["u"])
    outcome = vector.simulate_capacity_parking(a, u)
    if outcome.success:
        _emit({"assignment": list(outcome.assignment)})
    else:
        _emit({"failed_car": outcome.failed_car})
    return EXIT_OK


def _cmd_decompose(args) -> int:
    data = _read_instance(args)
    if args.family in ("classical", "vector"):
        a = tuple(data["a"])
        u = _classical_boundary(len(a)) if args.family == "classical" else tuple(data["u"])
        _emit(vector.decompose(a, u).to_json_dict())
    elif args.family == "pq":
        _emit(pq.decompose_pq(pq.PQPair.from_json_dict(data)).to_json_dict())
    else:
        raise ValueError("decompose supports the classical, vector, and pq families")
    return EXIT_OK


def _family_spec_from_args(args) -> FamilySpec:
    prime, increasing = args.prime, args.increasing
    if args.family == "classical":
        if args.n is None:
            raise ValueError("classical family needs --n")
        return FamilySpec("classical", prime, increasing, n=args.n)
    if args.family == "vector":
        if args.u:
            u = _parse_int_list(args.u)
        elif args.s is not None and args.b is not None and args.n is not None:
            u = tuple(args.s + args.b * i for i in range(args.n))
        else:
            raise ValueError("vector family needs --u or the triple --s/--b/--n")
        return FamilySpec("vector", prime, increasing, u=u)
    if args.family == "pq":
        if args.p is None or args.q is None:
            raise ValueError("pq family needs --p and --q")
        return FamilySpec("pq", prime, increasing, p=args.p, q=args.q)
    return FamilySpec("twodim", prime, increasing, weights=_weights_from_args(args))


def _formula_count(args) -> int:
    prime, increasing = args.prime, args.increasing
    if args.family in ("classical", "vector"):
        if args.family == "classical":
            if args.n is None:
                raise ValueError("classical family needs --n")
            s, b, n = 1, 1, args.n
        elif args.s is not None and args.b is not None and args.n is not None:
            s, b, n = args.s, args.b, args.n
        elif args.u:
            u = _parse_int_list(args.u)
            s, b = u[0], (u[1] - u[0] if len(u) > 1 else 0)
            if tuple(s + b * i for i in range(len(u))) != u:
                raise ValueError(f"--u {u} is not an arithmetic progression; no closed form applies")
            n = len(u)
        else:
            raise ValueError("vector formula counts need --s/--b/--n or an arithmetic --u")
        table = {
            (False, False): vector.count_pf_arith,
            (False, True): vector.count_ipf_arith,
            (True, False): vector.count_ppf_arith,
            (True, True): vector.count_ippf_arith,
        }
        return table[(prime, increasing)](s, b, n)
    if args.family == "pq":
        if args.p is None or args.q is None:
            raise ValueError("pq family needs --p and --q")
        table = {
            (False, False): pq.count_pq_pf,
            (False, True): pq.count_pq_ipf,
            (True, False): pq.count_pq_ppf,
            (True, True): pq.count_pq_ippf,
        }
        return table[(prime, increasing)](args.p, args.q)
    spec = _affine_spec_from_args(args)
    table = {
        (False, False): twodim.count_affine_pf,
        (False, True): twodim.count_affine_ipf,
        (True, False): twodim.count_affine_ppf,
        (True, True): twodim.count_affine_ippf,
    }
    return table[(prime, increasing)](spec)


def _cmd_count(args) -> int:
    if args.method == "formula":
        print(_formula_count(args))
        return EXIT_OK
    spec = _family_spec_from_args(args)
    report = oracle.count(spec, cap=_resolve_cap(args), shards=args.shards)
    print(report.count)
    return EXIT_OK


def _cmd_list(args) -> int:
    spec = _family_spec_from_args(args)
    for instance in oracle.enumerate_members(spec, cap=_resolve_cap(args)):
        if len(instance) == 1:
            _emit({"a": list(instance[0])})
        else:
            _emit({"a": list(instance[0]), "b": list(instance[1])})
    return EXIT_OK


# ---------------------------------------------------------------------------
# Verification suites
# ---------------------------------------------------------------------------


def load_suite(name: str) -> dict:
    path = resources.files("parkfn").joinpath(f"suites/{name}.json")
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise ValueError(f"unknown suite {name!r}; available: {', '.join(SUITE_NAMES)}")


_QUANTITY_LABELS = ("pf", "ipf", "ppf", "ippf")


def _variant(quantity: str) -> tuple[bool, bool]:
    return ("pp" in quantity, quantity.startswith("i"))


def expand_suite(manifest: dict):
    """Deterministically expand a suite manifest into verification rows.

    Each row is (family, params dict, quantity); the runner computes the
    closed-form value and the reference value (oracle count, or the
    alternative formula for the ``ppf-sum`` rows).
    """
    rows = []
    for grid in manifest["grids"]:
        family = grid["family"]
        if family == "classical":
            for n in grid["n"]:
                for quantity in grid["quantities"]:
                    rows.append((family, {"n": n}, quantity))
        elif family == "vector-arith":
            for s in grid["s"]:
                for b in grid["b"]:
                    for n in grid["n"]:
                        for quantity in grid["quantities"]:
                            rows.append((family, {"s": s, "b": b, "n": n}, quantity))
        elif family == "pq":
            for p in grid["p"]:
                for q in grid["q"]:
                    for quantity in grid["quantities"]:
                        rows.append((family, {"p": p, "q": q}, quantity))
        elif family == "pq-ppf-sum":
            for p in grid["p"]:
                for q in grid["q"]:
                    rows.append((family, {"p": p, "q": q}, "ppf-sum"))
        elif family == "affine":
            for a in grid["a"]:
                for b in grid["b"]:
                    for c in grid["c"]:
                        for d in grid["d"]:
                            for s in grid["s"]:
                                for t in grid["t"]:
                                    for p in grid["p"]:
                                        for q in grid["q"]:
                                            params = {"a": a, "b": b, "c": c, "d": d, "s": s, "t": t, "p": p, "q": q}
                                            for quantity in grid["quantities"]:
                                                rows.append((family, params, quantity))
        else:
            raise ValueError(f"unknown grid family {family!r}")
    return rows


def run_row(family: str, params: dict, quantity: str, cap: Optional[int]) -> tuple[int, int]:
    """(formula value, reference value) for one verification row."""
    if family == "pq-ppf-sum":
        return pq.count_pq_ppf(params["p"], params["q"]), pq.count_pq_ppf_sum(params["p"], params["q"])
    prime, increasing = _variant(quantity)
    if family == "classical":
        s, b, n = 1, 1, params["n"]
        formula = {
            (False, False): vector.count_pf_arith,
            (False, True): vector.count_ipf_arith,
            (True, False): vector.count_ppf_arith,
            (True, True): vector.count_ippf_arith,
        }[(prime, increasing)](s, b, n)
        spec = FamilySpec("classical", prime, increasing, n=n)
    elif family == "vector-arith":
        s, b, n = params["s"], params["b"], params["n"]
        formula = {
            (False, False): vector.count_pf_arith,
            (False, True): vector.count_ipf_arith,
            (True, False): vector.count_ppf_arith,
            (True, True): vector.count_ippf_arith,
        }[(prime, increasing)](s, b, n)
        spec = FamilySpec("vector", prime, increasing, u=tuple(s + b * i for i in range(n)))
    elif family == "pq":
        formula = {
            (False, False): pq.count_pq_pf,
            (False, True): pq.count_pq_ipf,
            (True, False): pq.count_pq_ppf,
            (True, True): pq.count_pq_ippf,
        }[(prime, increasing)](params["p"], params["q"])
        spec = FamilySpec("pq", prime, increasing, p=params["p"], q=params["q"])
    elif family == "affine":
        aspec = twodim.AffineWeightSpec(
            params["a"], params["b"], params["c"], params["d"], params["s"], params["t"], params["p"], params["q"]
        )
        formula = {
            (False, False): twodim.count_affine_pf,
            (False, True): twodim.count_affine_ipf,
            (True, False): twodim.count_affine_ppf,
            (True, True): twodim.count_affine_ippf,
        }[(prime, increasing)](aspec)
        spec = FamilySpec("twodim", prime, increasing, weights=twodim.affine_weight_matrix(aspec))
    else:
        raise ValueError(f"unknown row family {family!r}")
    return formula, oracle.count(spec, cap=cap).count


def _params_text(params: dict) -> str:
    return ";".join(f"{key}={params[key]}" for key in params)


def _cmd_verify(args) -> int:
    manifest = load_suite(args.suite)
    rows = expand_suite(manifest)
    cap = _resolve_cap(args)
    results = []
    all_pass = True
    for family, params, quantity in rows:
        formula, reference = run_row(family, params, quantity, cap)
        ok = formula == reference
        all_pass = all_pass and ok
        results.append(
            {
                "family": family,
                "params": _params_text(params),
                "quantity": quantity,
                "formula": formula,
                "oracle": reference,
                "pass": ok,
            }
        )
    if args.format == "json":
        print(
            json.dumps(
                {"suite": manifest["name"], "version": manifest["version"], "rows": results, "all_pass": all_pass},
                sort_keys=True,
                separators=(",", ":"),
            )
        )
    else:
        writer = csv.DictWriter(sys.stdout, fieldnames=["family", "params", "quantity", "formula", "oracle", "pass"])
        writer.writeheader()
        for row in results:
            writer.writerow(row)
    passed = sum(1 for row in results if row["pass"])
    print(f"suite {manifest['name']}: {passed}/{len(results)} rows pass", file=sys.stderr)
    return EXIT_OK if all_pass else EXIT_DISAGREEMENT


# ---------------------------------------------------------------------------
# Argument parsing
# ---------------------------------------------------------------------------


def _add_family_arguments(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--family", required=True, choices=("classical", "vector", "pq", "twodim"))
    sub.add_argument("--n", type=int, help="length (classical, or arithmetic vector boundary)")
    sub.add_argument("--u", help="comma-separated capacity vector, e.g. 1,2,4")
    sub.add_argument("--s", type=int, help="arithmetic boundary start u_i = s + b*i")
    sub.add_argument("--b", type=int, help="arithmetic boundary step")
    sub.add_argument("--p", type=int, help="pair shape p")
    sub.add_argument("--q", type=int, help="pair shape q")
    sub.add_argument("--affine", help="six comma-separated affine weights a,b,c,d,s,t")
    sub.add_argument("--matrix-file", help="JSON weight grid {p,q,nodes}")
    sub.add_argument("--prime", action="store_true")
    sub.add_argument("--increasing", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="parkfn", description="Parking-function toolkit: check, simulate, decompose, count, list, verify.")
    subs = parser.add_subparsers(dest="command", required=True)

    for name, needs_instance in (("check", True), ("simulate", True), ("decompose", True)):
        sub = subs.add_parser(name)
        _add_family_arguments(sub)
        if needs_instance:
            sub.add_argument("--file", help="instance JSON (defaults to stdin)")

    count_p = subs.add_parser("count")
    _add_family_arguments(count_p)
    count_p.add_argument("--method", choices=("formula", "oracle"), default="formula")
    count_p.add_argument("--shards", type=int, default=1)
    count_p.add_argument("--cap", type=int, help="candidate cap (overrides PARKFN_SEARCH_CAP)")

    list_p = subs.add_parser("list")
    _add_family_arguments(list_p)
    list_p.add_argument("--cap", type=int, help="candidate cap (overrides PARKFN_SEARCH_CAP)")

    verify_p = subs.add_parser("verify")
    verify_p.add_argument("--suite", required=True)
    verify_p.add_argument("--format", choices=("csv", "json"), default="csv")
    verify_p.add_argument("--cap", type=int, help="candidate cap (overrides PARKFN_SEARCH_CAP)")
    return parser


_COMMANDS = {
    "check": _cmd_check,
    "simulate": _cmd_simulate,
    "decompose": _cmd_decompose,
    "count": _cmd_count,
    "list": _cmd_list,
    "verify": _cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except SearchSpaceTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except (ParkfnError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
