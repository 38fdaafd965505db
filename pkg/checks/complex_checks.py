"""
Проверки свойства комплекса для f и g
"""

import logging

from chain_complex import build_f_complex, build_g_complex

from .base_check import BaseCheck

logger = logging.getLogger("pachner_grassmann")


def _compositions(pairs):
    nonzero = {}
    for name, outer, inner in pairs:
        if outer.is_empty or inner.is_empty:
            nonzero[name] = 0
            continue
        nonzero[name] = outer.compose(inner).nnz()
    return nonzero


class FComplexCheck(BaseCheck):
    """
    f₃f₂ = 0, f₄f₃ = 0, f₅f₄ = 0 и f̃₄f̃₃ = 0 при случайных ζ
    """
    name = "f-complex"
    default_tri = "boundary_delta5"

    def process(self, seed):
        triangulation, lattice = self.load()
        zeta = self.coordinates(triangulation.vertex_ids, seed)
        fc = build_f_complex(triangulation, lattice, zeta)
        nonzero = _compositions([
            ("f3f2", fc.f3, fc.f2),
            ("f4f3", fc.f4, fc.f3),
            ("f5f4", fc.f5, fc.f4),
            ("f4f3_tilde", fc.f4_tilde, fc.f3_tilde),
        ])
        ranks_match = (fc.f3.rank() == fc.f3_tilde.rank()
                       and fc.f4.rank() == fc.f4_tilde.rank())
        passed = not any(nonzero.values()) and ranks_match
        return self.report(
            seed, passed, theorem="cf", equal=passed, tri=self.tri,
            nonzero=nonzero, ranks_match=ranks_match,
        )


class GComplexCheck(BaseCheck):
    """
    g₃g₂ = 0, g₄g₃ = 0, g₅g₄ = 0 при случайных ζ
    """
    name = "g-complex"
    default_tri = "boundary_delta5"

    def process(self, seed):
        triangulation, lattice = self.load()
        zeta = self.coordinates(triangulation.vertex_ids, seed)
        gc = build_g_complex(triangulation, lattice, zeta)
        nonzero = _compositions([
            ("g3g2", gc.g3, gc.g2),
            ("g4g3", gc.g4, gc.g3),
            ("g5g4", gc.g5, gc.g4),
        ])
        passed = not any(nonzero.values())
        return self.report(seed, passed, theorem="cg", equal=passed, tri=self.tri, nonzero=nonzero)
