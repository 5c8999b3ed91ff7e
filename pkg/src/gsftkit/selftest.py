"""Golden-file checks and a small randomized battery, run by ``gsft selftest``."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from .gsft import (augmentation_matrix, extension_matrix, graph_action_from_json, graph_action_is_inert, is_inert,
                   quotient_presentation, zeta_equal)
from .groups import FiniteGroup
from .jsonio import load_data_file, read_group_ring_matrix, read_int_matrix
from .matrices import (IntMatrix, determinant, find_permutation_similarity, kronecker, reciprocal_charpoly)
from .periodic import kim_roush_condition
from .flow import weight_group
from .sampling import random_group_ring_matrix


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, "detail": self.detail}


class _Golden:
    def __init__(self, directory: str | Path | None):
        self.directory = Path(directory) if directory is not None else None

    def __call__(self, name: str):
        if self.directory is None:
            return load_data_file(name)
        return json.loads((self.directory / name).read_text(encoding="utf-8"))


def _grid(m: IntMatrix):
    return [list(r) for r in m.entries]


def _checks(golden: _Golden, quick: bool) -> list[tuple[str, Callable[[], tuple[bool, str]]]]:
    def expected():
        return golden("expected.json")

    def twisted():
        return read_group_ring_matrix(golden("twisted_golden.json"))

    def aug_twisted():
        got = _grid(augmentation_matrix(twisted()))
        return got == expected()["twisted_golden"]["augmentation"], f"got {got}"

    def ext_twisted():
        got = _grid(extension_matrix(twisted()))
        return got == expected()["twisted_golden"]["extension"], f"got {got}"

    def inert_twisted():
        b = twisted()
        verdict, zeta = is_inert(b).inert, zeta_equal(b)
        want = expected()["twisted_golden"]["inert"]
        return verdict == want and zeta == want, f"is_inert={verdict} zeta_equal={zeta}"

    def weight_twisted():
        got = list(weight_group(twisted()).subgroup)
        return got == expected()["twisted_golden"]["weight_group"], f"got {got}"

    def quotient_x():
        action = graph_action_from_json(golden("swap_x.json"))
        b, _ = quotient_presentation(action)
        aug = _grid(augmentation_matrix(b))
        inert = graph_action_is_inert(action).inert
        exp = expected()["swap"]
        return aug == exp["X_quotient_augmentation"] and inert == exp["X_inert"], f"aug={aug} inert={inert}"

    def quotient_y():
        action = graph_action_from_json(golden("swap_y.json"))
        b, _ = quotient_presentation(action)
        aug = augmentation_matrix(b)
        exp = expected()["swap"]
        similar = find_permutation_similarity(aug, IntMatrix(exp["Y_quotient_augmentation_similar_to"]))
        inert = graph_action_is_inert(action).inert
        return similar is not None and inert == exp["Y_inert"], f"aug={_grid(aug)} inert={inert}"

    def det_y():
        a = read_int_matrix(golden("swap_y.json"), "adjacency")
        d = determinant(a)
        return abs(d) == expected()["swap"]["abs_det_Y"], f"det={d}"

    def fixed_points():
        a_x = IntMatrix([[2]])
        a_u = IntMatrix([[1, 1], [1, 0]])
        a_y = read_int_matrix(golden("swap_y.json"), "adjacency")
        t_u = kronecker(a_x, a_u).trace()
        t_y = kronecker(a_x, a_y).trace()
        exp = expected()["swap"]
        return (t_u == exp["fixed_points_X_times_U"] and t_y == exp["fixed_points_X_times_Y"],
                f"tr(X(x)U)={t_u} tr(X(x)Y)={t_y}")

    def kim_roush():
        exp = expected()["kim_roush"]
        v2 = kim_roush_condition(read_int_matrix(golden("full2.json")), 2, 16)
        v3 = kim_roush_condition(read_int_matrix(golden("full3.json")), 3, 9)
        vg = kim_roush_condition(read_int_matrix(golden("golden_mean.json")), 2, 16)
        fail = vg.first_failure.n if vg.first_failure else None
        ok = (v2.passed == exp["full2_p2_N16"] and v3.passed == exp["full3_p3_N9"]
              and fail == exp["golden_mean_p2_first_failure"])
        return ok, f"full2={v2.passed} full3={v3.passed} golden_mean_fails_at={fail}"

    def battery():
        rng = random.Random(20240501)
        count = 60 if quick else 500
        groups = [FiniteGroup.cyclic(2), FiniteGroup.cyclic(3)]
        for k in range(count):
            group = groups[k % 2]
            b = random_group_ring_matrix(rng, group, rng.randint(1, 3), 2)
            verdict, zeta = is_inert(b).inert, zeta_equal(b)
            if verdict != zeta:
                return False, f"sample {k}: is_inert={verdict} zeta_equal={zeta} for {b!r}"
            if not reciprocal_charpoly(augmentation_matrix(b)).divides(reciprocal_charpoly(extension_matrix(b))):
                return False, f"sample {k}: divisibility fails for {b!r}"
        return True, f"{count} samples agree"

    return [
        ("twisted_golden.augmentation", aug_twisted),
        ("twisted_golden.extension", ext_twisted),
        ("twisted_golden.not_inert", inert_twisted),
        ("twisted_golden.weight_group", weight_twisted),
        ("swap.quotient_X", quotient_x),
        ("swap.quotient_Y", quotient_y),
        ("swap.det_Y", det_y),
        ("swap.fixed_points", fixed_points),
        ("kim_roush.golden", kim_roush),
        ("inertness_battery", battery),
    ]


def run_selftest(quick: bool = False, golden_dir: str | Path | None = None) -> list[CheckResult]:
    results = []
    for name, check in _checks(_Golden(golden_dir), quick):
        try:
            ok, detail = check()
        except Exception as exc:  # a broken golden file must surface as a named failure
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(name, bool(ok), detail))
    return results
