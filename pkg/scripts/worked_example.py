#!/usr/bin/env python3
"""Walk through the fixed worked example I = (x^3, x*y, y^2) end to end:
staircase, closure, adjoint by both routes, lengths, presentation matrix,
Fitting chain and core."""

from regcore.field import QQ
from regcore.modcore import ModuleRep, core_module, fitting
from regcore.reduction import GenericSampler, adjoint_ideal, hilbert_samuel
from regcore.serialize import ideal_text, module_text
from regcore.staircase import (MonomialIdeal, adjoint, ascii_staircase,
                               colength, integral_closure, multiplicity)
from regcore.trunc import TruncatedIdeal


def main():
    ideal = MonomialIdeal.from_exponents([(3, 0), (1, 1), (0, 2)])
    print(f"I = {ideal}")
    print(ascii_staircase(ideal))
    print(f"integrally closed: {integral_closure(ideal) == ideal}")
    print(f"colength = {colength(ideal)}, multiplicity = {multiplicity(ideal)}")

    tri = TruncatedIdeal.from_monomial(ideal, QQ)
    sampler = GenericSampler(seed=42)
    print(f"adjoint (lattice oracle) = {ideal_text(adjoint(ideal))}")
    print(f"adjoint (colon of reduction) = "
          f"{ideal_text(adjoint_ideal(tri, sampler))}")
    print(f"hilbert-samuel (two methods) = "
          f"{hilbert_samuel(tri, GenericSampler(seed=42))}")

    module = ModuleRep.from_monomial_ideal(ideal, QQ)
    print("presentation matrix:")
    for row in module.presentation:
        print("   [" + ", ".join(f"{str(e):>5}" for e in row) + "]")
    for k in (2, 1, 0):
        print(f"I_{k}(A) = {ideal_text(fitting(module.presentation, k, QQ))}")

    core = core_module(module, sampler)
    print(f"core(I) = {module_text(core)}")


if __name__ == "__main__":
    main()
