"""Compare the compiled QuadExt core with the pure-Python fallback.

    python3 benchmarks/bench_backends.py [--p 5/2 --r 3/2 --sign plus]
"""
import argparse
import os
import subprocess
import sys
import timeit
from fractions import Fraction

from wrapkit import _quadpy

try:
    from wrapkit import _quadc
except ImportError:
    _quadc = None

E2E = """
import time
from fractions import Fraction
from wrapkit.characterize import WrapParams
from wrapkit.construct import construct_wrapping
from wrapkit.exact_field import BACKEND
from wrapkit.verify import verify_wrapping
t = time.perf_counter()
spec = construct_wrapping(WrapParams(Fraction({p!r}), Fraction({r!r}), {sign}))
ok = verify_wrapping(spec).is_valid
print(BACKEND, spec.g, ok, round(time.perf_counter() - t, 3))
"""


def micro(mod, number):
    Q = mod.QuadExt
    x, y = Q(Fraction(3, 7), Fraction(-5, 11), 3), Q(Fraction(2, 9), Fraction(4, 13), 3)

    def work():
        z = x * y + x / y - y
        return z.sign()
    return min(timeit.repeat(work, number=number, repeat=5)) / number * 1e6


def end_to_end(p, r, sign, pure):
    env = dict(os.environ)
    if pure:
        env["WRAPKIT_PURE_PYTHON"] = "1"
    else:
        env.pop("WRAPKIT_PURE_PYTHON", None)
    code = E2E.format(p=str(p), r=str(r), sign=sign)
    out = subprocess.run([sys.executable, "-c", code], env=env, check=True,
                         capture_output=True, text=True).stdout.split()
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", default="5/2")
    ap.add_argument("--r", default="3/2")
    ap.add_argument("--sign", choices=["plus", "minus"], default="plus")
    ap.add_argument("--number", type=int, default=20000)
    args = ap.parse_args()

    print("micro (x*y + x/y - y, sign), microseconds per op")
    print(f"  python   {micro(_quadpy, args.number):8.2f}")
    if _quadc is not None:
        print(f"  compiled {micro(_quadc, args.number):8.2f}")
    else:
        print("  compiled  (extension not built)")

    sign = 1 if args.sign == "plus" else -1
    print(f"construct + verify p={args.p} r={args.r} sign={args.sign}")
    for pure in (False, True):
        backend, g, ok, secs = end_to_end(args.p, args.r, sign, pure)
        print(f"  {backend:8s} g={g} valid={ok} {secs}s")


if __name__ == "__main__":
    main()
