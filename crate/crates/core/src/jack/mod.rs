//! Symmetric functions in the monomial, power-sum and Jack-J bases, the
//! alpha-deformed Hall inner product, and integral-form Jack polynomials.
//!
//! Symmetric functions are handled abstractly, as finite maps from
//! partitions to `Q(alpha)` coefficients labeled with a basis; no variable
//! sets are involved. Each value is homogeneous: all keyed partitions have
//! the same size.

mod engine;
mod tables;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::alpha::{AlphaPoly, AlphaRat, Rational};
use crate::error::{Error, Result};
use crate::partition::{revlex_desc, Partition};

pub(crate) use engine::{degree_tables, jack_table, numeric_table_at_one, JackTable};

/// Basis tag for a symmetric function.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Basis {
    Monomial,
    PowerSum,
    JackJ,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Basis::Monomial => "monomial",
            Basis::PowerSum => "powersum",
            Basis::JackJ => "jackJ",
        };
        write!(f, "{s}")
    }
}

impl Basis {
    /// One-letter symbol used when rendering terms.
    pub fn symbol(self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::PowerSum => "p",
            Basis::JackJ => "J",
        }
    }
}

/// A homogeneous symmetric function: a finite map from partitions of a
/// common size to nonzero `Q(alpha)` coefficients, tagged with a basis.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, AlphaRat>,
}

impl SymFunc {
    /// Builds from raw terms, dropping zero coefficients.
    ///
    /// Panics when the keyed partitions do not all have the same size.
    pub fn new(basis: Basis, terms: BTreeMap<Partition, AlphaRat>) -> Self {
        let terms: BTreeMap<Partition, AlphaRat> =
            terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let mut sizes = terms.keys().map(|p| p.size());
        if let Some(first) = sizes.next() {
            assert!(
                sizes.all(|s| s == first),
                "symmetric function must be homogeneous"
            );
        }
        SymFunc { basis, terms }
    }

    pub fn zero(basis: Basis) -> Self {
        SymFunc {
            basis,
            terms: BTreeMap::new(),
        }
    }

    /// The basis element indexed by `lambda`, with coefficient one.
    pub fn unit(basis: Basis, lambda: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(lambda, AlphaRat::one());
        SymFunc { basis, terms }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, AlphaRat> {
        &self.terms
    }

    /// Common size of the keyed partitions; `None` for the zero function.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next().map(|p| p.size())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, p: &Partition) -> AlphaRat {
        self.terms.get(p).cloned().unwrap_or_else(AlphaRat::zero)
    }

    pub fn scale(&self, c: &AlphaRat) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero(self.basis);
        }
        SymFunc {
            basis: self.basis,
            terms: self.terms.iter().map(|(p, a)| (p.clone(), a * c)).collect(),
        }
    }

    pub fn add(&self, other: &SymFunc) -> SymFunc {
        assert_eq!(self.basis, other.basis, "cannot add across bases");
        let mut terms = self.terms.clone();
        for (p, c) in &other.terms {
            let entry = terms.entry(p.clone()).or_insert_with(AlphaRat::zero);
            *entry = &*entry + c;
        }
        SymFunc::new(self.basis, terms)
    }

    pub fn sub(&self, other: &SymFunc) -> SymFunc {
        self.add(&other.scale(&-AlphaRat::one()))
    }

    /// Product of two symmetric functions.
    ///
    /// Computed in the power-sum basis, where `p_lambda p_mu` is the
    /// power sum of the sorted concatenation of parts, then converted back
    /// to the basis of `self`.
    pub fn mul(&self, other: &SymFunc) -> SymFunc {
        let a = convert(self, Basis::PowerSum);
        let b = convert(other, Basis::PowerSum);
        let mut terms: BTreeMap<Partition, AlphaRat> = BTreeMap::new();
        for (pa, ca) in a.terms() {
            for (pb, cb) in b.terms() {
                let mut parts: Vec<usize> = pa.parts().to_vec();
                parts.extend_from_slice(pb.parts());
                parts.sort_unstable_by(|x, y| y.cmp(x));
                let key = Partition::new(parts);
                let entry = terms.entry(key).or_insert_with(AlphaRat::zero);
                *entry = &*entry + &(ca * cb);
            }
        }
        convert(&SymFunc::new(Basis::PowerSum, terms), self.basis)
    }

    /// Terms in reverse-lexicographic display order (`(n)` first).
    pub fn terms_revlex(&self) -> Vec<(&Partition, &AlphaRat)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| revlex_desc(a.0, b.0));
        v
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let sym = self.basis.symbol();
        let mut first = true;
        for (p, c) in self.terms_revlex() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "{sym}{p}")?;
            } else {
                write!(f, "({c})*{sym}{p}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Expansion of the power sum `p_lambda` in the monomial basis (integer
/// coefficients).
pub fn power_in_monomial(lambda: &Partition) -> SymFunc {
    let terms = tables::power_expansion(lambda)
        .into_iter()
        .map(|(p, c)| (p, AlphaRat::from_rational(Rational::from_integer(c))))
        .collect();
    SymFunc::new(Basis::Monomial, terms)
}

/// Value-preserving basis change.
pub fn convert(f: &SymFunc, target: Basis) -> SymFunc {
    if f.basis() == target {
        return f.clone();
    }
    if f.is_zero() {
        return SymFunc::zero(target);
    }
    let n = f.degree().unwrap();
    match (f.basis(), target) {
        (Basis::PowerSum, Basis::Monomial) => {
            let t = degree_tables(n);
            let mut terms: BTreeMap<Partition, AlphaRat> = BTreeMap::new();
            for (p, c) in f.terms() {
                let k = t.index[p];
                for (j, b) in &t.p_to_m[k] {
                    let add = c * &AlphaRat::from_rational(Rational::from_integer(b.clone()));
                    let entry = terms
                        .entry(t.parts[*j].clone())
                        .or_insert_with(AlphaRat::zero);
                    *entry = &*entry + &add;
                }
            }
            SymFunc::new(Basis::Monomial, terms)
        }
        (Basis::Monomial, Basis::PowerSum) => {
            let t = degree_tables(n);
            let mut terms: BTreeMap<Partition, AlphaRat> = BTreeMap::new();
            for (p, c) in f.terms() {
                let i = t.index[p];
                for (k, b) in &t.m_to_p[i] {
                    let add = c * &AlphaRat::from_rational(b.clone());
                    let entry = terms
                        .entry(t.parts[*k].clone())
                        .or_insert_with(AlphaRat::zero);
                    *entry = &*entry + &add;
                }
            }
            SymFunc::new(Basis::PowerSum, terms)
        }
        (Basis::JackJ, _) => {
            let table = jack_table(n);
            let rows = match target {
                Basis::Monomial => &table.m_coeffs,
                _ => &table.p_coeffs,
            };
            let mut terms: BTreeMap<Partition, AlphaRat> = BTreeMap::new();
            for (p, c) in f.terms() {
                let i = table.tables.index[p];
                for (j, poly) in rows[i].iter().enumerate() {
                    if poly.is_zero() {
                        continue;
                    }
                    let add = c * &AlphaRat::from_poly(poly.clone());
                    let entry = terms
                        .entry(table.tables.parts[j].clone())
                        .or_insert_with(AlphaRat::zero);
                    *entry = &*entry + &add;
                }
            }
            SymFunc::new(target, terms)
        }
        (_, Basis::JackJ) => {
            // Orthogonality route: coefficient of J_gamma is
            // <f, J_gamma> / <J_gamma, J_gamma>.
            let table = jack_table(n);
            let fp = convert(f, Basis::PowerSum);
            let mut terms: BTreeMap<Partition, AlphaRat> = BTreeMap::new();
            for (i, gamma) in table.tables.parts.iter().enumerate() {
                let inner = inner_with_row(&fp, &table, i);
                if inner.is_zero() {
                    continue;
                }
                let g = &inner / &AlphaRat::from_poly(table.norms[i].clone());
                terms.insert(gamma.clone(), g);
            }
            SymFunc::new(Basis::JackJ, terms)
        }
        _ => unreachable!(),
    }
}

/// Conversion into the Jack basis by triangular elimination against the
/// monomial expansions, highest partition first. An independent route to
/// the same coefficients as [`convert`]; the two are cross-checked in
/// tests.
pub fn convert_to_jack_by_solve(f: &SymFunc) -> SymFunc {
    if f.is_zero() {
        return SymFunc::zero(Basis::JackJ);
    }
    let n = f.degree().unwrap();
    let table = jack_table(n);
    let t = &table.tables;
    let fm = convert(f, Basis::Monomial);
    let mut rem: Vec<AlphaRat> = vec![AlphaRat::zero(); t.parts.len()];
    for (p, c) in fm.terms() {
        rem[t.index[p]] = c.clone();
    }
    let mut terms: BTreeMap<Partition, AlphaRat> = BTreeMap::new();
    for i in (0..t.parts.len()).rev() {
        if rem[i].is_zero() {
            continue;
        }
        let lead = AlphaRat::from_poly(table.m_coeffs[i][i].clone());
        let g = &rem[i] / &lead;
        for (j, poly) in table.m_coeffs[i].iter().enumerate() {
            if poly.is_zero() {
                continue;
            }
            rem[j] = &rem[j] - &(&g * &AlphaRat::from_poly(poly.clone()));
        }
        terms.insert(t.parts[i].clone(), g);
    }
    assert!(
        rem.iter().all(|c| c.is_zero()),
        "triangular elimination left a nonzero remainder"
    );
    SymFunc::new(Basis::JackJ, terms)
}

/// Inner product of a power-sum symmetric function with table row `i`.
fn inner_with_row(fp: &SymFunc, table: &Arc<JackTable>, i: usize) -> AlphaRat {
    let t = &table.tables;
    let mut acc = AlphaRat::zero();
    for (p, c) in fp.terms() {
        let k = t.index[p];
        let jc = &table.p_coeffs[i][k];
        if jc.is_zero() {
            continue;
        }
        let w = AlphaPoly::monomial(Rational::from_integer(t.z[k].clone()), t.lens[k]);
        acc = &acc + &(c * &AlphaRat::from_poly(jc * &w));
    }
    acc
}

/// The alpha-deformed Hall inner product, with
/// `<p_lambda, p_mu> = delta z_lambda alpha^{l(lambda)}`.
///
/// Arguments of different degrees are orthogonal; the product is zero by
/// convention rather than an error.
pub fn hall_inner(f: &SymFunc, g: &SymFunc) -> AlphaRat {
    if f.is_zero() || g.is_zero() {
        return AlphaRat::zero();
    }
    if f.degree() != g.degree() {
        return AlphaRat::zero();
    }
    let fp = convert(f, Basis::PowerSum);
    let gp = convert(g, Basis::PowerSum);
    let t = degree_tables(f.degree().unwrap());
    let mut acc = AlphaRat::zero();
    for (p, a) in fp.terms() {
        let Some(b) = gp.terms().get(p) else {
            continue;
        };
        let k = t.index[p];
        let w = AlphaPoly::monomial(Rational::from_integer(t.z[k].clone()), t.lens[k]);
        acc = &acc + &(&(a * b) * &AlphaRat::from_poly(w));
    }
    acc
}

/// The integral-form Jack polynomial `J_lambda` in the monomial basis.
///
/// Coefficients are polynomials in alpha with integer coefficients; the
/// coefficient of `m_{1^n}` is `n!` and the expansion is dominance
/// triangular.
pub fn jack_j(lambda: &Partition) -> SymFunc {
    let table = jack_table(lambda.size());
    let i = table.tables.index[lambda];
    let terms = table.m_coeffs[i]
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(j, c)| {
            (
                table.tables.parts[j].clone(),
                AlphaRat::from_poly(c.clone()),
            )
        })
        .collect();
    SymFunc::new(Basis::Monomial, terms)
}

/// `J_lambda` expanded in the power-sum basis.
pub fn jack_j_powersum(lambda: &Partition) -> SymFunc {
    let table = jack_table(lambda.size());
    let i = table.tables.index[lambda];
    let terms = table.p_coeffs[i]
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(j, c)| {
            (
                table.tables.parts[j].clone(),
                AlphaRat::from_poly(c.clone()),
            )
        })
        .collect();
    SymFunc::new(Basis::PowerSum, terms)
}

/// The squared norm `<J_lambda, J_lambda>` as the product of upper and
/// lower hook values over the boxes of `lambda`.
pub fn jack_norm(lambda: &Partition) -> AlphaPoly {
    let mut prod = AlphaPoly::one();
    for b in lambda.boxes() {
        let uh = lambda.upper_hook(b).unwrap().value();
        let lh = lambda.lower_hook(b).unwrap().value();
        prod = &prod * &(&uh * &lh);
    }
    prod
}

/// The squared norm accumulated from the inner product in the power-sum
/// basis (the hook-product formula is checked against this in tests).
pub fn jack_norm_from_inner(lambda: &Partition) -> AlphaPoly {
    let table = jack_table(lambda.size());
    table.norms[table.tables.index[lambda]].clone()
}

/// Classical hook-length product `prod (arm + leg + 1)`; both hook values
/// specialize to it at `alpha = 1`.
pub fn classical_hook_product(lambda: &Partition) -> Rational {
    let mut prod = Rational::one();
    for b in lambda.boxes() {
        let h = lambda.arm(b).unwrap() + lambda.leg(b).unwrap() + 1;
        prod *= Rational::from_integer(h.into());
    }
    prod
}

/// Degrees whose expansion tables are currently memoized.
pub fn cached_degree_list() -> Vec<usize> {
    engine::cached_degrees()
}

/// Serializes the memoized Jack expansion table for one degree.
pub fn degree_table_json(n: usize) -> serde_json::Value {
    let table = jack_table(n);
    crate::json::jack_table_to_json(&table)
}

/// Installs a previously serialized degree table after validation.
pub fn preload_degree_table(value: &serde_json::Value) -> std::result::Result<(), String> {
    let (n, m_coeffs) = crate::json::jack_table_from_json(value)?;
    engine::install_jack_table(n, m_coeffs)
}

/// Evaluates `<J_mu J_nu, J_lambda> / <J_lambda, J_lambda>` with alpha
/// specialized to one, using the numeric orthogonalization tables.
pub(crate) fn jack_lr_coeff_at_one(
    mu: &Partition,
    nu: &Partition,
    lambda: &Partition,
) -> Result<Rational> {
    let n = lambda.size();
    if mu.size() + nu.size() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            got: mu.size() + nu.size(),
        });
    }
    let tmu = numeric_table_at_one(mu.size());
    let tnu = numeric_table_at_one(nu.size());
    let tl = numeric_table_at_one(n);
    let t = &tl.tables;
    // Product of J_mu and J_nu in the power-sum basis at alpha = 1.
    let imu = tmu.tables.index[mu];
    let inu = tnu.tables.index[nu];
    let mut prod: BTreeMap<Partition, Rational> = BTreeMap::new();
    for (ka, ca) in tmu.p_rows[imu].iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (kb, cb) in tnu.p_rows[inu].iter().enumerate() {
            if cb.is_zero() {
                continue;
            }
            let mut parts = tmu.tables.parts[ka].parts().to_vec();
            parts.extend_from_slice(tnu.tables.parts[kb].parts());
            parts.sort_unstable_by(|x, y| y.cmp(x));
            let key = Partition::new(parts);
            *prod.entry(key).or_insert_with(Rational::zero) += ca * cb;
        }
    }
    let il = t.index[lambda];
    let mut inner = Rational::zero();
    for (p, c) in &prod {
        let k = t.index[p];
        let jc = &tl.p_rows[il][k];
        if jc.is_zero() {
            continue;
        }
        inner += c * jc * Rational::from_integer(t.z[k].clone());
    }
    Ok(inner / &tl.norms[il])
}
