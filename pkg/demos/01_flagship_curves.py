"""Classify the four flagship inputs and print their certificates.

Two genus-2 Jacobians land on opposite sides of the fence: y^2 = x^5 - x
has all its iterated 2-power torsion inside a tower ramified only above 2,
while y^2 = x^6 - 1 picks up ramification at 3 and is ruled out.  The
elliptic curve y^2 = x^3 - 2 fails for a different reason: its 2-division
field is unramified away from 2 in no way at all -- the cube root drags in
the prime 3.
"""

from heavenly import EllipticInput, JacobianInput, UniPoly, classify

FLAGSHIPS = (
    ("y^2 = x^5 - x", JacobianInput("Q", UniPoly.of(0, -1, 0, 0, 0, 1))),
    ("y^2 = x^5 + x", JacobianInput("Q", UniPoly.of(0, 1, 0, 0, 0, 1))),
    ("y^2 = x^6 - 1", JacobianInput("Q", UniPoly.of(-1, 0, 0, 0, 0, 0, 1))),
    ("y^2 = x^3 - 2", EllipticInput("Q", UniPoly.of(-2, 0, 0, 1))),
)


def show(name, item):
    verdict = classify(item)
    print(f"== {name}")
    print(f"   verdict: {verdict.status}")
    print(f"   2-division field degree over the base: "
          f"{verdict.torsion_degree}")
    if verdict.closure_degree is not None:
        print(f"   Galois closure degree over Q: {verdict.closure_degree}")
    print(f"   good-reduction screen: {verdict.screen}")
    print("   certificate:")
    for step in verdict.steps:
        tag = "axiom " if step.kind == "axiom" else "compute"
        values = ", ".join(f"{k}={v}" for k, v in step.values)
        print(f"     [{tag}] {step.description}")
        if values:
            print(f"              {values}")
    print()


def main():
    for name, item in FLAGSHIPS:
        show(name, item)


if __name__ == "__main__":
    main()
