import pytest

import shellcert as sc
from shellcert.catalog import dunce_hat, gcd_violator, strong_gcd_witness
from shellcert.facts import (
    FALSE,
    OUT_OF_SCOPE,
    TRUE,
    UNKNOWN,
    FactConflict,
    FactTable,
    Slot,
    build_fact_table,
    close_under_rules,
)

from conftest import seeded_complexes


def table_with(flag=False, **values):
    t = FactTable(complex=None, flag=flag)
    for name, (value, prov) in values.items():
        t.slots[name] = Slot(value, prov)
    return t


class TestClosure:
    def test_gcd_true_infers_golod(self):
        t = table_with(strong_gcd=(TRUE, "computed"))
        close_under_rules(t)
        assert t.slots["golod"].value == TRUE
        assert t.slots["golod"].provenance == "inferred:gcd-implies-golod"

    def test_shellable_true_infers_everything(self):
        t = table_with(dual_shellable=(TRUE, "computed"))
        close_under_rules(t)
        assert t.values() == (TRUE, TRUE, TRUE, TRUE)
        assert t.slots["dual_shellable"].provenance == "computed"
        assert t.slots["strong_gcd"].provenance.startswith("inferred")

    def test_golod_false_propagates_backwards(self):
        t = table_with(golod=(FALSE, "computed"))
        close_under_rules(t)
        assert t.values() == (FALSE, FALSE, FALSE, FALSE)

    def test_idempotent(self):
        t = table_with(dual_shellable=(TRUE, "computed"))
        close_under_rules(t)
        snapshot = [(s.value, s.provenance) for s in t.slots.values()]
        close_under_rules(t)
        assert snapshot == [(s.value, s.provenance) for s in t.slots.values()]

    def test_inferred_never_overwrites_computed(self):
        t = table_with(strong_gcd=(TRUE, "computed"), golod=(TRUE, "computed"))
        close_under_rules(t)
        assert t.slots["golod"].provenance == "computed"

    def test_conflict_raises(self):
        t = table_with(strong_gcd=(TRUE, "computed"), golod=(FALSE, "computed"))
        with pytest.raises(FactConflict):
            close_under_rules(t)

    def test_flag_equalizes(self):
        t = table_with(flag=True, dual_seq_cm=(FALSE, "computed"))
        close_under_rules(t)
        assert t.values() == (FALSE, FALSE, FALSE, FALSE)

    def test_flag_disagreement_raises(self):
        t = table_with(flag=True, dual_shellable=(TRUE, "computed"),
                       golod=(FALSE, "computed"))
        with pytest.raises(FactConflict):
            close_under_rules(t)


class TestBuildFactTable:
    def test_gcd_witness_row(self):
        t = build_fact_table(strong_gcd_witness())
        assert t.values() == (FALSE, TRUE, FALSE, TRUE)
        assert t.slots["dual_shellable"].provenance == "computed"
        assert t.slots["strong_gcd"].provenance == "computed"
        assert t.slots["dual_seq_cm"].provenance == "computed"
        assert t.slots["golod"].provenance == "inferred:gcd-implies-golod"

    def test_dunce_dual_row(self):
        t = build_fact_table(sc.alexander_dual(dunce_hat()))
        assert t.values() == (FALSE, TRUE, TRUE, TRUE)
        assert t.slots["golod"].provenance.startswith("inferred")

    def test_violator_row(self):
        t = build_fact_table(gcd_violator())
        assert t.values() == (FALSE, FALSE, FALSE, OUT_OF_SCOPE)
        assert t.slots["golod"].note  # records that nothing was verified

    def test_scm_by_field_recorded(self):
        t = build_fact_table(strong_gcd_witness())
        assert t.scm_by_field == {"GF(2)": False, "Q": False}

    def test_full_simplex(self):
        c = sc.from_facets(sc.VertexSet.of(range(1, 4)), [{1, 2, 3}])
        t = build_fact_table(c)
        assert t.values() == (TRUE, TRUE, TRUE, TRUE)

    def test_tiny_threshold_never_fabricates(self):
        # a budgeted search may still prove FALSE by exhausting its region,
        # or find a certificate; it must never claim the wrong thing
        t = build_fact_table(dunce_hat(), max_facets=3)
        exact = build_fact_table(dunce_hat())
        for name in ("dual_shellable", "strong_gcd"):
            assert t.slots[name].value in (exact.slots[name].value, UNKNOWN)

    def test_ghosted_complex_skips_ghost_sensitive_rules(self):
        # two edges of a path: dual facets miss a single vertex each, the
        # shelling-to-gcd implication does not apply
        c = sc.from_facets(sc.VertexSet.of(range(1, 4)), [{1, 2}, {2, 3}])
        d = sc.alexander_dual(c)
        t = build_fact_table(d)  # d has a ghost vertex
        assert not t.ghost_free
        assert t.slots["dual_shellable"].value == TRUE
        assert t.slots["strong_gcd"].value == FALSE  # no conflict raised

    def test_no_conflicts_on_random_samples(self):
        for c in seeded_complexes(50, seed=135, n_range=(3, 6)):
            t = build_fact_table(c)
            for name in ("dual_shellable", "strong_gcd"):
                assert t.slots[name].value in (TRUE, FALSE, UNKNOWN)
            close_under_rules(t)  # idempotence holds and raises nothing

    def test_flag_complexes_get_equal_rows(self):
        checked = 0
        seed = 0
        while checked < 30:
            seed += 1
            c = sc.random_flag_complex(seed, 5 + seed % 3, 0.55)
            d = sc.alexander_dual(c)
            if d.is_void:
                continue
            checked += 1
            t = build_fact_table(c)
            assert t.flag
            vals = set(t.values())
            assert len(vals) == 1, t.as_text()


class TestIndependentFlagLegs:
    def test_four_legs_agree(self):
        checked = 0
        seed = 100
        while checked < 25:
            seed += 1
            c = sc.random_flag_complex(seed, 4 + seed % 4, 0.5)
            dual = sc.alexander_dual(c)
            if dual.is_void:
                continue
            checked += 1
            shellable = sc.find_shelling_order(dual) is not None
            gcd = sc.find_strong_gcd_order(c) is not None
            support = sc.restrict_to_support(dual)
            cm2 = sc.is_cohen_macaulay(support, sc.GF2).ok
            cmq = sc.is_cohen_macaulay(support, sc.QQ).ok
            assert shellable == gcd == cm2 == cmq
