"""
Проверки соотношений хода 3→3 и исследование хода 2→4
"""

import logging

from pachner import (
    ASSEMBLIES, PachnerMove, explore_24, verify_33, verify_b, verify_d1,
    verify_w_independence,
)
from triangulation import COMMON_BOUNDARY_33
from weights import random_xchain

from .base_check import BaseCheck

logger = logging.getLogger("pachner_grassmann")

# Степени, допустимые в деформированных интегралах сторон
DEFORMED_DEGREES = {0, 2, 4}

MOVE_VERTICES = (1, 2, 3, 4, 5, 6)


class Pachner33Check(BaseCheck):
    """
    Соотношение 3→3 и независимость интегралов сторон от выбора w
    """
    name = "pachner33"

    def process(self, seed):
        zeta = self.coordinates(MOVE_VERTICES, seed)
        move = PachnerMove.move_33(zeta)
        report = verify_33(zeta, move=move)
        w_reports = verify_w_independence(zeta, move=move)
        w_independent = all(r.equal for r in w_reports)
        return self.report(
            seed, report.equal and w_independent,
            w_independent=w_independent, **report.to_json(),
        )


class TheoremD1Check(BaseCheck):
    """
    Деформированное соотношение 3→3 для случайной цепи общих граничных тетраэдров
    """
    name = "theorem-d1"

    def process(self, seed):
        zeta = self.coordinates(MOVE_VERTICES, seed)
        rng = self.chain_rng(seed)
        coeffs = {t: self.field.random(rng) for t in COMMON_BOUNDARY_33}
        report = verify_d1(zeta, coeffs)
        degrees = set(report.lhs_value.degrees()) | set(report.rhs_value.degrees())
        graded = degrees <= DEFORMED_DEGREES
        return self.report(seed, report.equal and graded, graded=graded, **report.to_json())


class TheoremBCheck(BaseCheck):
    """
    Интеграл каждой стороны 3→3 не меняется при сдвиге x-цепи на образ g₃
    """
    name = "theorem-b"

    def process(self, seed):
        zeta = self.coordinates(MOVE_VERTICES, seed)
        rng = self.chain_rng(seed)
        move = PachnerMove.move_33(zeta)
        sides = {}
        for side in (move.lhs, move.rhs):
            base_x = random_xchain(side.cluster, self.field, rng)
            coeffs = {t: self.field.random(rng) for t in side.inner_tets}
            report = verify_b(side, zeta, base_x, coeffs)
            sides[side.name] = {
                "equal": report.equal,
                "residual_terms": len(report.residual),
                "degrees": report.lhs_value.degrees(),
            }
        passed = all(s["equal"] for s in sides.values())
        return self.report(seed, passed, theorem="b", equal=passed, sides=sides)


class Explore24Check(BaseCheck):
    """
    Исследование хода 2→4: отчеты по сборкам без контракта на невязку
    """
    name = "explore24"

    def process(self, seed):
        zeta = self.coordinates(MOVE_VERTICES, seed)
        move = PachnerMove.move_24(zeta)
        assemblies = {}
        for assembly in ASSEMBLIES:
            rng = self.chain_rng(seed)
            report = explore_24(zeta, self.deform, assembly, rng, move=move)
            assemblies[assembly] = report.to_json()
            logger.info(
                f"2→4 seed={seed} {assembly}: невязка {len(report.residual)} членов, "
                f"пропорциональность: {report.extra['proportional']}"
            )
        return self.report(seed, True, theorem="24", deform=self.deform, assemblies=assemblies)
