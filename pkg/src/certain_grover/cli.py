"""Command-line front end.

Every command is a thin client over the HTTP service. By default the app is
called in process through an ASGI transport (no socket, no server process);
--server URL points the same client at a running instance instead.
"""

import argparse
import asyncio
import json
import random
import sys

import httpx

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_INFEASIBLE = 3


def _call(server, method, path, params=None, body=None):
    """Send one request, in process or over the wire. Returns (status, json)."""
    if server:
        with httpx.Client(base_url=server, timeout=600.0) as client:
            resp = client.request(method, path, params=params, json=body)
            return resp.status_code, resp.json()

    async def go():
        from .api import app

        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(
            transport=transport, base_url="http://service", timeout=600.0
        ) as client:
            resp = await client.request(method, path, params=params, json=body)
            return resp.status_code, resp.json()

    return asyncio.run(go())


def _emit(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _error_exit(status: int, body) -> int:
    detail = body.get("detail", body) if isinstance(body, dict) else body
    if status == 409 and isinstance(detail, dict):
        print(f"infeasible schedule: {detail.get('message', detail)}", file=sys.stderr)
        return EXIT_INFEASIBLE
    print(f"error ({status}): {detail}", file=sys.stderr)
    return EXIT_USAGE


def cmd_params(args) -> int:
    status, body = _call(args.server, "GET", "/params", params={"n": args.n})
    if status != 200:
        return _error_exit(status, body)
    if args.format == "json":
        text = json.dumps(body, indent=2) + "\n"
    elif args.format == "csv":
        lines = ["field,value"]
        lines += [f"{key},{_fmt(value)}" for key, value in body.items()]
        text = "\n".join(lines) + "\n"
    else:
        text = (
            f"n            {body['n']}\n"
            f"beta         {_fmt(body['beta'])}\n"
            f"j_op         {body['j_op']}\n"
            f"refined_j    {body['refined_j']}\n"
            f"p_max        {_fmt(body['p_max'])}\n"
            f"j_min        {body['j_min']}\n"
            f"phi          {_fmt(body['phi'])}\n"
            f"phi_over_pi  {body['phi_over_pi']:.6f}\n"
        )
    _emit(text, args.out)
    return EXIT_OK


def _fmt(value) -> str:
    if isinstance(value, float):
        return f"{value:.17g}"
    return str(value)


def cmd_table(args) -> int:
    status, body = _call(args.server, "GET", f"/table/{args.which}")
    if status != 200:
        return _error_exit(status, body)
    rows = body["rows"]
    if args.format == "json":
        text = json.dumps(body, indent=2) + "\n"
    elif args.format == "csv":
        if args.which == 1:
            lines = ["label,n,j_op,ratio"]
            lines += [
                f"{r['label']},{r['n']},{r['j_op']},{r['ratio']:.9f}" for r in rows
            ]
        else:
            lines = ["label,n,steps,phi_over_pi"]
            lines += [
                f"{r['label']},{r['n']},{r['steps']},{r['phi_over_pi']:.6f}"
                for r in rows
            ]
        text = "\n".join(lines) + "\n"
    else:
        if args.which == 1:
            lines = ["n          j_op        (2 j_op + 1) beta / (pi/2)"]
            lines += [
                f"{r['label']:<10} {r['j_op']:<11} {r['ratio']:.9f}" for r in rows
            ]
        else:
            lines = ["n          steps       phi / pi"]
            lines += [
                f"{r['label']:<10} {r['steps']:<11} {r['phi_over_pi']:.6f}"
                for r in rows
            ]
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_trace(args) -> int:
    tau = args.tau
    if args.random_tau:
        seed = random.SystemRandom().randrange(2**32)
        print(f"tau seed: {seed}", file=sys.stderr)
        tau = random.Random(seed).randrange(args.n)

    body = {
        "n": args.n,
        "tau": tau,
        "j": args.j,
        "phi": args.phi,
        "formalism": args.formalism,
        "steps": args.steps,
        "force": args.force,
    }
    status, resp = _call(args.server, "POST", "/trace", body=body)
    if status != 200:
        return _error_exit(status, resp)
    points = resp["trace"]
    if args.format == "json":
        text = json.dumps(resp, indent=2) + "\n"
    elif args.format == "csv":
        lines = ["step,probability"]
        lines += [f"{pt['step']},{pt['p']:.17g}" for pt in points]
        text = "\n".join(lines) + "\n"
    else:
        lines = ["step  probability"]
        lines += [f"{pt['step']:>4}  {pt['p']:.17g}" for pt in points]
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    body = {
        "max_n": args.max_n,
        "phi_perturb": args.phi_perturb,
        "cases": args.cases,
    }
    if args.seed is not None:
        body["seed"] = args.seed
    status, resp = _call(args.server, "POST", "/verify", body=body)
    if status != 200:
        return _error_exit(status, resp)
    lines = []
    for check in resp["checks"]:
        tag = "PASS" if check["passed"] else "FAIL"
        lines.append(f"{tag}  {check['name']}: {check['detail']}")
    failed = sum(1 for check in resp["checks"] if not check["passed"])
    if failed:
        lines.append(f"{failed} of {len(resp['checks'])} checks failed")
    else:
        lines.append(f"all {len(resp['checks'])} checks passed")
    _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if resp["all_passed"] else EXIT_VERIFY_FAILED


def cmd_serve(args) -> int:
    import uvicorn

    from .api import app

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="certain-grover",
        description="Phase-tuned amplitude amplification with a certain outcome.",
    )
    parser.add_argument(
        "--server",
        default=None,
        help="base URL of a running service; default runs the app in process",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_params = sub.add_parser("params", help="report the derived parameters for n")
    p_params.add_argument("--n", type=int, required=True)
    _output_flags(p_params)
    p_params.set_defaults(func=cmd_params)

    p_table = sub.add_parser("table", help="recompute summary table 1 or 2")
    p_table.add_argument("which", type=int, choices=(1, 2))
    _output_flags(p_table)
    p_table.set_defaults(func=cmd_table)

    p_trace = sub.add_parser("trace", help="run a search and export the trace")
    p_trace.add_argument("--n", type=int, required=True)
    marked = p_trace.add_mutually_exclusive_group()
    marked.add_argument("--tau", type=int, default=0)
    marked.add_argument(
        "--random-tau",
        action="store_true",
        help="draw tau at random and print the seed to stderr",
    )
    p_trace.add_argument("--j", type=int, default=None, help="step budget")
    p_trace.add_argument(
        "--phi", type=float, default=None, help="phase override in radians"
    )
    p_trace.add_argument(
        "--force",
        action="store_true",
        help="allow --j and --phi together",
    )
    p_trace.add_argument(
        "--formalism",
        choices=("reduced", "so3", "spectral", "full"),
        default="reduced",
    )
    p_trace.add_argument("--steps", type=int, default=None)
    _output_flags(p_trace)
    p_trace.set_defaults(func=cmd_trace)

    p_verify = sub.add_parser("verify", help="run the consistency checks")
    p_verify.add_argument("--max-n", type=int, default=10**4)
    p_verify.add_argument(
        "--phi-perturb",
        type=float,
        default=0.0,
        help="test hook: shift every certainty phase by this much",
    )
    p_verify.add_argument("--cases", type=int, default=200)
    p_verify.add_argument("--seed", type=int, default=None)
    p_verify.add_argument("--out", default=None)
    p_verify.set_defaults(func=cmd_verify)

    p_serve = sub.add_parser("serve", help="start the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.set_defaults(func=cmd_serve)

    return parser


def _output_flags(subparser) -> None:
    subparser.add_argument(
        "--format", choices=("csv", "json", "table"), default="table"
    )
    subparser.add_argument("--out", default=None, help="write output to this path")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except httpx.HTTPError as exc:
        print(f"request failed: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
