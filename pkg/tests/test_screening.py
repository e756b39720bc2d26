import pytest

from polysum import catalog
from polysum.polycore import SumDomain, Term
from polysum.screening import (
    PRESETS,
    canonical_triple,
    coefficient_tail_cutoff,
    compare_with_catalog,
    format_triple,
    order_tail_cutoff,
    screen,
    unique_exception_scan,
    verify_certificate,
)

N, Z = SumDomain.NATURALS, SumDomain.INTEGERS


def test_order_tail_cutoff_triangular_pair():
    wit, cutoff = order_tail_cutoff([Term(1, 3), Term(1, 3)], 1, N)
    assert wit == [33] and cutoff == 36


def test_order_tail_cutoff_examples():
    wit, _ = order_tail_cutoff([Term(1, 3), Term(1, 4)], 1, N)
    assert wit == [34]
    assert order_tail_cutoff([Term(1, 3), Term(1, 3)], 1, N, search_bound=3) is None


def test_coefficient_tail_cutoff_examples():
    wit, cutoff = coefficient_tail_cutoff([Term(1, 5), Term(1, 5)], Z)
    assert wit == [11] and cutoff == 11
    wit, cutoff = coefficient_tail_cutoff([Term(1, 3), Term(1, 3)], N)
    assert wit == [5] and cutoff == 5
    wit, _ = coefficient_tail_cutoff([Term(1, 4), Term(1, 4)], N)
    assert wit == [3]


def test_liouville_screen():
    report = screen("liouville")
    got = [tuple(a for a, _ in t) for t in report.survivors]
    assert got == [(1, 1, 1), (1, 1, 2), (1, 1, 4), (1, 1, 5),
                   (1, 2, 2), (1, 2, 3), (1, 2, 4)]
    missing, extra = compare_with_catalog(report, catalog.load("liouville-7").entries)
    assert missing == [] and extra == []


def test_mixed_34_screen():
    report = screen("mixed-34-list")
    missing, extra = compare_with_catalog(report,
                                          catalog.load("mixed-34-25").entries)
    assert missing == [] and extra == []


def test_same_order_screen_over_z():
    report = screen("thm-1.1i")
    assert len(report.survivors) == 20
    assert all(all(m == 5 for _, m in t) for t in report.survivors)
    missing, extra = compare_with_catalog(report, catalog.load("thm-1.1i-20").entries)
    assert missing == [] and extra == []


def test_certificates_verify():
    for preset in ("liouville", "mixed-34-list", "thm-1.3"):
        report = screen(preset)
        assert all(verify_certificate(c) for c in report.eliminations)


def test_weighted_screen_and_certificates():
    report = screen("thm-1.4")
    missing, extra = compare_with_catalog(report, catalog.load("thm-1.4-64").entries)
    assert missing == [] and extra == []
    kinds = {c.kind for c in report.eliminations}
    assert kinds == {"direct", "order-tail", "coefficient-tail", "frontier-tail"}
    assert all(verify_certificate(c) for c in report.eliminations)
    assert report.derived_bounds["product-floor"] >= 9


def test_space_not_closable_at_tiny_search_bound():
    from polysum.screening import SpaceNotClosable
    with pytest.raises(SpaceNotClosable):
        screen("thm-1.3", bound=10_000, search_bound=4)


def test_direct_certificates_resurvive_bound_increase():
    # raising the scan bound never adds survivors
    small = screen("liouville", bound=2000)
    large = screen("liouville", bound=10_000)
    assert set(large.survivors) <= set(small.survivors)


def test_compare_with_catalog_mutation():
    report = screen("liouville")
    mutated = list(catalog.load("liouville-7").entries)
    mutated[0] = ((1, 3), (1, 3), (7, 3))
    missing, extra = compare_with_catalog(report, mutated)
    assert len(missing) == 1 and len(extra) == 1


def test_unique_scan_contains_sole_exception_pairs():
    found = dict(unique_exception_scan("unique-29", bound=10_000))
    assert found[((1, 3), (1, 5), (1, 32))] == 31
    assert found[((1, 4), (1, 5), (1, 8))] == 19
    listed = catalog.load("unique-29").entries
    assert all(t in found for t in listed)
    assert max(found[t] for t in listed) == 468


def test_canonical_triple_and_format():
    triple = canonical_triple([(2, 4), (1, 3), (1, 4)])
    assert triple == ((1, 3), (1, 4), (2, 4))
    assert format_triple(triple) == "p3+p4+2p4"


def test_space_coverage_sampled():
    from polysum.screening import report_covers

    report = screen("thm-1.3")
    for triple in [((1, 3), (1, 4), (1, 27)),      # survivor
                   ((1, 3), (1, 3), (1, 9)),       # direct elimination
                   ((1, 3), (1, 5), (1, 1000)),    # order tail
                   ((1, 3), (1, 40), (1, 90)),     # pair frontier
                   ((1, 70), (1, 80), (1, 90))]:   # level-0 frontier
        assert report_covers(report, triple), triple

    report = screen("thm-1.4")
    for triple in [((1, 3), (2, 3), (1, 23)),          # survivor
                   ((1, 3), (1, 3), (3, 5)),           # direct elimination
                   ((1, 3), (2, 4), (2, 200)),         # order tail
                   ((1, 3), (1, 4), (555, 7)),         # coefficient tail
                   ((1, 3), (7, 30), (11, 40)),        # pair frontier
                   ((2, 11), (3, 12), (5, 13))]:       # level-0 frontier
        assert report_covers(report, triple), triple

    report = screen("liouville")
    for triple in [((1, 3), (1, 3), (4, 3)),
                   ((1, 3), (1, 3), (777, 3)),
                   ((1, 3), (5, 3), (9, 3)),
                   ((4, 3), (5, 3), (6, 3))]:
        assert report_covers(report, triple), triple

    report = screen("mixed-34-list")
    for triple in [((2, 3), (5, 3), (1, 4)),     # survivor
                   ((1, 3), (1, 3), (3, 4)),     # direct elimination
                   ((1, 3), (1, 3), (90, 4)),    # coefficient tail
                   ((1, 3), (44, 3), (2, 4)),    # parametric region
                   ((9, 3), (12, 3), (77, 4))]:  # outermost region
        assert report_covers(report, triple), triple


def test_space_membership():
    space = PRESETS["thm-1.4"]
    assert space.contains(((1, 3), (1, 3), (2, 5)))
    assert not space.contains(((1, 3), (1, 3), (1, 5)))  # no coefficient > 1
    assert not space.contains(((1, 3), (2, 3), (2, 4)))  # max order < 5
