import json
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from symhodge.hodgecore import (
    ExteriorPresentation,
    GeneratorFamily,
    HodgeTable,
    PresentationError,
    compact_duality,
    cstar,
    e_poly,
    gl,
    hodge_table,
    lag,
    lie,
    load_presentation,
    mhp,
    point,
    poincare,
    preset,
    torus,
)
from symhodge.polyring import TriPoly

P = TriPoly.parse

PRESETS = [torus(1), torus(2), cstar(1), cstar(3), gl(2), gl(3), lag([2, 1]), lie([(3, 1), (5, 2)])]

families = st.lists(
    st.builds(
        GeneratorFamily,
        d=st.sampled_from([1, 3, 5]),
        p=st.integers(0, 3),
        q=st.integers(0, 3),
        r=st.integers(1, 3),
    ),
    max_size=4,
)


def subset_sum_table(pres):
    """Brute force: one entry per subset of the individual generators."""
    gens = [f.signature for f in pres.families for _ in range(f.r)]
    table = {}
    for bits in product((0, 1), repeat=len(gens)):
        key = tuple(sum(g[i] for g, b in zip(gens, bits) if b) for i in range(3))
        table[key] = table.get(key, 0) + 1
    return table


class TestPresentation:
    def test_merges_and_sorts(self):
        pres = ExteriorPresentation((GeneratorFamily(3, 2, 2, 1), GeneratorFamily(1, 1, 1, 1), GeneratorFamily(1, 1, 1, 2)))
        assert pres.families == (GeneratorFamily(1, 1, 1, 3), GeneratorFamily(3, 2, 2, 1))

    @pytest.mark.parametrize("bad", [dict(d=2, p=0, q=0), dict(d=1, p=-1, q=0), dict(d=1, p=0, q=0, r=0), dict(d=-1, p=0, q=0)])
    def test_invalid_family(self, bad):
        with pytest.raises(PresentationError):
            GeneratorFamily(**bad)

    def test_json_roundtrip_presets(self):
        for pres in PRESETS:
            assert ExteriorPresentation.from_json(pres.to_json()) == pres

    def test_load_file(self, tmp_path):
        path = tmp_path / "gl2.json"
        path.write_text(gl(2).to_json())
        assert load_presentation(path).families == gl(2).families

    def test_load_rejects_even_degree(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps({"generators": [{"d": 2, "p": 1, "q": 1, "r": 1}]}))
        with pytest.raises(PresentationError, match="odd"):
            load_presentation(path)

    def test_load_merges_duplicates(self, tmp_path):
        path = tmp_path / "dup.json"
        gens = [{"d": 1, "p": 1, "q": 1, "r": 1}, {"d": 1, "p": 1, "q": 1, "r": 2}]
        path.write_text(json.dumps({"label": "x", "generators": gens}))
        assert load_presentation(path).families == (GeneratorFamily(1, 1, 1, 3),)

    def test_schema_errors(self):
        with pytest.raises(PresentationError):
            ExteriorPresentation.from_json("[]")
        with pytest.raises(PresentationError):
            ExteriorPresentation.from_json('{"generators": [{"d": 1}]}')
        with pytest.raises(PresentationError):
            ExteriorPresentation.from_json('{"generators": [{"d": 1, "p": 0, "q": "a"}]}')
        with pytest.raises(PresentationError):
            ExteriorPresentation.from_json("{not json")


class TestPresets:
    def test_torus(self):
        assert preset("torus", d=2).families == (GeneratorFamily(1, 0, 1, 2), GeneratorFamily(1, 1, 0, 2))

    def test_gl(self):
        assert preset("gl", m=3).families == (
            GeneratorFamily(1, 1, 1, 1),
            GeneratorFamily(3, 2, 2, 1),
            GeneratorFamily(5, 3, 3, 1),
        )

    def test_lie(self):
        assert preset("lie", gens=[(3, 1)]).families == (GeneratorFamily(3, 0, 0, 1),)

    def test_lag(self):
        assert lag([1, 1]).families == gl(2).families
        assert lag([0, 1]).families == (GeneratorFamily(3, 2, 2, 1),)

    def test_errors(self):
        with pytest.raises(PresentationError):
            torus(0)
        with pytest.raises(PresentationError):
            lie([(2, 1)])
        with pytest.raises(PresentationError):
            lag([1, -1])
        with pytest.raises(KeyError):
            preset("sphere")


class TestMHP:
    def test_examples(self):
        assert mhp(gl(2)) == P("1 + t*u*v") * P("1 + t^3*u^2*v^2")
        assert mhp(torus(1)) == P("1 + t*u") * P("1 + t*v")
        assert mhp(cstar(4)) == P("1 + t*u*v") ** 4

    def test_hodge_table(self):
        assert dict(hodge_table(torus(1)).items()) == {(0, 0, 0): 1, (1, 1, 0): 1, (1, 0, 1): 1, (2, 1, 1): 1}
        assert dict(hodge_table(cstar(1)).items()) == {(0, 0, 0): 1, (1, 1, 1): 1}
        assert dict(hodge_table(point()).items()) == {(0, 0, 0): 1}

    def test_specializations(self):
        assert poincare(gl(2)) == P("1 + t + t^3 + t^4")
        assert e_poly(cstar(1)) == P("1 - u*v")
        assert poincare(point()) == 1

    @given(families)
    def test_total_dimension(self, fams):
        pres = ExteriorPresentation(tuple(fams))
        assert mhp(pres)(1, 1, 1) == 2 ** pres.generator_count
        assert hodge_table(pres).total() == 2 ** pres.generator_count

    @pytest.mark.parametrize("pres", PRESETS, ids=lambda p: p.label)
    def test_table_is_subset_sums(self, pres):
        assert dict(hodge_table(pres).items()) == subset_sum_table(pres)

    @given(families)
    def test_table_is_subset_sums_random(self, fams):
        pres = ExteriorPresentation(tuple(fams))
        assert dict(hodge_table(pres).items()) == subset_sum_table(pres)

    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_torus_hodge_symmetry(self, d):
        table = hodge_table(torus(d))
        for (k, p, q), h in table.items():
            assert table[(k, q, p)] == h


class TestDuality:
    def test_cstar(self):
        dual = compact_duality(hodge_table(cstar(1)), 1)
        assert dict(dual.items()) == {(2, 1, 1): 1, (1, 0, 0): 1}
        assert dual.compact
        # E_c(C*) = E_c(C) - E_c(point) = uv - 1
        e_c = dual.to_poly().specialize(t=-1)
        assert e_c == P("u*v - 1")

    def test_point_self_dual(self):
        table = hodge_table(point())
        assert dict(compact_duality(table, 0).items()) == dict(table.items())

    def test_torus_self_dual(self):
        table = hodge_table(torus(1))
        dual = compact_duality(table, 1)
        assert dict(dual.items()) == {(2, 1, 1): 1, (1, 1, 0): 1, (1, 0, 1): 1, (0, 0, 0): 1}

    @pytest.mark.parametrize("pres", [torus(1), torus(2), cstar(1), cstar(3), gl(2), gl(3)], ids=lambda p: p.label)
    def test_involution(self, pres):
        table = hodge_table(pres)
        twice = compact_duality(compact_duality(table, pres.dim), pres.dim)
        assert twice == table

    def test_uses_table_dimension(self):
        assert compact_duality(hodge_table(gl(2))).dim == 4

    def test_dimension_too_small(self):
        with pytest.raises(ValueError):
            compact_duality(hodge_table(torus(2)), 1)
        with pytest.raises(ValueError):
            compact_duality(HodgeTable({(1, 1, 1): 1}))

    def test_negative_entry_rejected(self):
        with pytest.raises(ValueError):
            HodgeTable({(0, 0, 0): -1})
