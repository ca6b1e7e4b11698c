//! Large worked fixtures that exercise the symbolic engine at degrees
//! beyond the acceptance sweeps. These take noticeably longer than the
//! rest of the suite (the degree-14 tables are built once and shared).

use jacklr::alpha::{rat, AlphaPoly, AlphaRat};
use jacklr::jack::jack_norm;
use jacklr::lattice::union_factorization_check;
use jacklr::lr::{jack_lr, stanley_coeff};
use jacklr::partition::Partition;

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec())
}

fn ap(coeffs: &[i64]) -> AlphaPoly {
    AlphaPoly::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
}

/// The printed factorization `2^9 3^2 alpha^6 (1+alpha)^4 (2+alpha)
/// (3+alpha)^2 (4+alpha)^2 (1+2alpha) (1+3alpha) (2+3alpha)^2 (5+3alpha)`.
fn worked_union_value() -> AlphaPoly {
    let mut want = ap(&[0, 0, 0, 0, 0, 0, 4608]);
    for f in [
        ap(&[1, 1]).pow(4),
        ap(&[2, 1]),
        ap(&[3, 1]).pow(2),
        ap(&[4, 1]).pow(2),
        ap(&[1, 2]),
        ap(&[1, 3]),
        ap(&[2, 3]).pow(2),
        ap(&[5, 3]),
    ] {
        want = &want * &f;
    }
    want
}

#[test]
fn worked_union_stanley_coefficient_degree_14() {
    let got = stanley_coeff(&p(&[4, 2, 2, 1, 1]), &p(&[2, 1, 1]), &p(&[4, 3, 3, 3, 1])).unwrap();
    assert_eq!(got, AlphaRat::from_poly(worked_union_value()));
}

#[test]
fn union_factorization_holds_for_worked_shape() {
    let report = union_factorization_check(&p(&[4, 2, 2, 1, 1]), 3, 4).unwrap();
    assert!(report.holds, "lhs {} vs rhs {}", report.lhs, report.rhs);

    // The same constant divided by the norm gives the plain structure
    // constant, matching the table entry.
    let lambda = p(&[4, 3, 3, 3, 1]);
    let table = jack_lr(&p(&[4, 2, 2, 1, 1]), &p(&[2, 1, 1]));
    let g = table.get(&lambda);
    let via_norm = AlphaRat::from_poly(worked_union_value())
        .checked_div(&AlphaRat::from_poly(jack_norm(&lambda)))
        .unwrap();
    assert_eq!(g, via_norm);

    // The factored form F * g_inner reproduces the same coefficient.
    let f = jacklr::hooks::union_factored_form(&p(&[4, 2, 2, 1, 1]), 3, 4).unwrap();
    assert_eq!(f.value(), g);
}
