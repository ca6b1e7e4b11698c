//! Rational functions in one variable `u` determined by a lattice multiset
//! of zeros and poles at bracket points `u = [b]`.
//!
//! A [`LatticeRational`] stores, for each lattice point `b`, the order of
//! the factor `(u - [b])^order`; positive orders are zeros, negative
//! orders are poles. The elementary building block is the cross-ratio
//! with zeros at the bottom-left and top-right vertices of a box and
//! poles at the other two; products over box multisets, and in particular
//! over star products of partitions, generate everything studied here.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::alpha::{bracket, AlphaPoly, AlphaRat};
use crate::error::{Error, Result};
use crate::jack::{hall_inner, jack_j_powersum, jack_norm_from_inner};
use crate::lr::jack_lr;
use crate::partition::{
    bar, decompose_wrt_rectangle, hflip, join, star_product, vflip, BoxCoord, BoxMultiset,
    Partition,
};

/// A finite product `prod_b (u - [b])^{order(b)}` over lattice points.
///
/// Multiplication adds orders pointwise; zero orders are never stored, so
/// equal functions have identical representations.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LatticeRational {
    orders: BTreeMap<BoxCoord, i64>,
}

impl LatticeRational {
    /// The constant function one.
    pub fn one() -> Self {
        LatticeRational::default()
    }

    pub fn is_one(&self) -> bool {
        self.orders.is_empty()
    }

    /// Multiplies in the factor `(u - [b])^order`.
    pub fn push_factor(&mut self, b: BoxCoord, order: i64) {
        if order == 0 {
            return;
        }
        let e = self.orders.entry(b).or_insert(0);
        *e += order;
        if *e == 0 {
            self.orders.remove(&b);
        }
    }

    pub fn from_factors<I: IntoIterator<Item = (BoxCoord, i64)>>(iter: I) -> Self {
        let mut t = LatticeRational::one();
        for (b, ord) in iter {
            t.push_factor(b, ord);
        }
        t
    }

    pub fn mul(&self, other: &LatticeRational) -> LatticeRational {
        let mut out = self.clone();
        for (&b, &ord) in &other.orders {
            out.push_factor(b, ord);
        }
        out
    }

    pub fn inv(&self) -> LatticeRational {
        LatticeRational {
            orders: self.orders.iter().map(|(&b, &o)| (b, -o)).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> LatticeRational {
        LatticeRational {
            orders: self
                .orders
                .iter()
                .filter(|_| k != 0)
                .map(|(&b, &o)| (b, o * k))
                .collect(),
        }
    }

    /// Order at a lattice point: positive for a zero, negative for a pole,
    /// zero when the function is regular and nonvanishing there.
    pub fn order_at(&self, s: BoxCoord) -> i64 {
        self.orders.get(&s).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (BoxCoord, i64)> + '_ {
        self.orders.iter().map(|(&b, &o)| (b, o))
    }

    pub fn zeros(&self) -> Vec<(BoxCoord, i64)> {
        self.iter().filter(|&(_, o)| o > 0).collect()
    }

    pub fn poles(&self) -> Vec<(BoxCoord, i64)> {
        self.iter().filter(|&(_, o)| o < 0).collect()
    }

    /// Value at `u = [s]`, defined only when the order at `s` is zero.
    pub fn value_at(&self, s: BoxCoord) -> Result<AlphaRat> {
        let ord = self.order_at(s);
        if ord != 0 {
            return Err(Error::NotARegularPoint {
                x: s.x,
                y: s.y,
                order: ord,
            });
        }
        self.product_skipping(s)
    }

    /// Residue at a simple pole `u = [s]`: the product of
    /// `([s] - [b])^{order(b)}` over all other points of the support.
    pub fn residue_at(&self, s: BoxCoord) -> Result<AlphaRat> {
        let ord = self.order_at(s);
        if ord != -1 {
            return Err(Error::NotASimplePole {
                x: s.x,
                y: s.y,
                order: ord,
            });
        }
        self.product_skipping(s)
    }

    fn product_skipping(&self, s: BoxCoord) -> Result<AlphaRat> {
        let mut num = AlphaPoly::one();
        let mut den = AlphaPoly::one();
        for (b, ord) in self.iter() {
            if b == s {
                continue;
            }
            // [s] - [b] = [s - b], nonzero since b != s.
            let lin = bracket(s.sub(b));
            let p = lin.pow(ord.unsigned_abs() as u32);
            if ord > 0 {
                num = &num * &p;
            } else {
                den = &den * &p;
            }
        }
        AlphaRat::new(num, den)
    }
}

impl fmt::Display for LatticeRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (b, o) in self.iter() {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if o == 1 {
                write!(f, "(u-[{},{}])", b.x, b.y)?;
            } else {
                write!(f, "(u-[{},{}])^{}", b.x, b.y, o)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LatticeRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The elementary cross-ratio attached to box `b`: zeros at `b` and
/// `b+(1,1)`, poles at `b+(1,0)` and `b+(0,1)`.
pub fn t_box(b: BoxCoord) -> LatticeRational {
    LatticeRational::from_factors([
        (b, 1),
        (b.up(), 1),
        (BoxCoord::new(b.x + 1, b.y), -1),
        (BoxCoord::new(b.x, b.y + 1), -1),
    ])
}

/// Product of elementary cross-ratios over a box multiset.
pub fn t_gamma(gamma: &BoxMultiset) -> LatticeRational {
    let mut t = LatticeRational::one();
    for (b, mult) in gamma.iter() {
        t = t.mul(&t_box(b).pow(mult as i64));
    }
    t
}

/// `T` of the star product of two partitions; symmetric in its arguments.
pub fn t_star(mu: &Partition, nu: &Partition) -> LatticeRational {
    t_gamma(&star_product(mu, nu))
}

/// `T` of a single partition in closed form: a zero at the origin, zeros
/// at the shifted inner corners, poles at the outer corners.
pub fn t_partition(mu: &Partition) -> LatticeRational {
    let mut t = LatticeRational::one();
    t.push_factor(BoxCoord::new(0, 0), 1);
    for s in mu.inner_corners_shifted() {
        t.push_factor(s, 1);
    }
    for s in mu.outer_corners() {
        t.push_factor(s, -1);
    }
    t
}

/// Pole order of `T` of a star product at `u = [s]`, counted with poles
/// positive: `|{b in nu : s-b outer corner of mu}| - |{b in nu : s-b
/// shifted inner corner of mu or the origin}|`.
///
/// Sign bridge: the map convention of [`LatticeRational`] counts zeros
/// positively, so this formula equals `-order_at(t_star(mu, nu), s)`;
/// both directions are exercised in tests.
pub fn order_formula(mu: &Partition, nu: &Partition, s: BoxCoord) -> i64 {
    let outer: BTreeSet<BoxCoord> = mu.outer_corners().into_iter().collect();
    let mut inner: BTreeSet<BoxCoord> = mu.inner_corners_shifted().into_iter().collect();
    inner.insert(BoxCoord::new(0, 0));
    let mut ord = 0i64;
    for b in nu.boxes() {
        let d = s.sub(b);
        if outer.contains(&d) {
            ord += 1;
        }
        if inner.contains(&d) {
            ord -= 1;
        }
    }
    ord
}

/// Dense polynomial in `u` over `Q(alpha)`, used to clear denominators
/// when comparing rational functions exactly.
#[derive(Clone, PartialEq, Eq, Debug)]
struct UPoly(Vec<AlphaRat>);

impl UPoly {
    fn zero() -> Self {
        UPoly(Vec::new())
    }

    fn one() -> Self {
        UPoly(vec![AlphaRat::one()])
    }

    fn normalize(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    fn scale(&self, c: &AlphaRat) -> UPoly {
        UPoly(self.0.iter().map(|a| a * c).collect()).normalize()
    }

    fn add(&self, other: &UPoly) -> UPoly {
        let len = self.0.len().max(other.0.len());
        let get = |p: &UPoly, i: usize| p.0.get(i).cloned().unwrap_or_else(AlphaRat::zero);
        UPoly((0..len).map(|i| &get(self, i) + &get(other, i)).collect()).normalize()
    }

    fn sub(&self, other: &UPoly) -> UPoly {
        self.add(&other.scale(&-AlphaRat::one()))
    }

    /// Multiplies by the linear factor `u - c`.
    fn mul_linear(&self, c: &AlphaRat) -> UPoly {
        let mut out = vec![AlphaRat::zero(); self.0.len() + 1];
        for (i, a) in self.0.iter().enumerate() {
            out[i + 1] = &out[i + 1] + a;
            out[i] = &out[i] - &(a * c);
        }
        UPoly(out).normalize()
    }

    /// Exact division by `u - c` (synthetic division); the remainder must
    /// vanish.
    fn div_linear(&self, c: &AlphaRat) -> UPoly {
        if self.0.is_empty() {
            return UPoly::zero();
        }
        let n = self.0.len();
        let mut q = vec![AlphaRat::zero(); n - 1];
        let mut carry = AlphaRat::zero();
        for i in (0..n).rev() {
            let coeff = &self.0[i] + &(&carry * c);
            if i == 0 {
                assert!(coeff.is_zero(), "linear factor does not divide");
            } else {
                q[i - 1] = coeff.clone();
                carry = coeff;
            }
        }
        UPoly(q).normalize()
    }
}

/// Per-point residue data gathered when the sum-product identity fails.
#[derive(Clone, Debug)]
pub struct ResidueComparison {
    pub point: BoxCoord,
    /// Sum of normalized structure constants over partitions
    /// contributing a pole at this point.
    pub lhs: AlphaRat,
    /// Residue of the star-product side, when the pole there is simple.
    pub rhs: Option<AlphaRat>,
}

/// Outcome of checking the sum-product identity for one pair.
#[derive(Clone, Debug)]
pub struct SumProductReport {
    pub mu: Partition,
    pub nu: Partition,
    pub holds: bool,
    /// Residue data for every support point; empty when the identity holds.
    pub witness: Vec<ResidueComparison>,
}

/// Checks, as an exact identity of rational functions in `u`, that the
/// structure-constant expansion over partitions `gamma` reproduces
/// `T` of the star product minus one:
///
/// `sum_gamma ghat_{mu nu}^gamma sum_{s in gamma \ (mu cup nu)} 1/(u-[s])
///  = T_{mu * nu}(u) - 1`.
///
/// Both sides are multiplied by a common product of linear factors and
/// compared coefficientwise; no evaluation points are involved.
pub fn verify_sum_product(mu: &Partition, nu: &Partition) -> SumProductReport {
    let table = jack_lr(mu, nu);
    let union = mu.union(nu);
    let varpi_mu_nu = &crate::lr::varpi(mu) * &crate::lr::varpi(nu);
    // Aggregate the left side as a map point -> summed coefficient.
    let mut lhs_coeffs: BTreeMap<BoxCoord, AlphaRat> = BTreeMap::new();
    for (gamma, g) in table.entries() {
        let scale = AlphaRat::new(crate::lr::varpi(gamma), varpi_mu_nu.clone())
            .expect("bracket products are nonzero");
        let gh = g * &scale;
        if gh.is_zero() {
            continue;
        }
        for s in gamma.boxes() {
            if union.contains_box(s) {
                continue;
            }
            let e = lhs_coeffs.entry(s).or_insert_with(AlphaRat::zero);
            *e = &*e + &gh;
        }
    }
    let t = t_star(mu, nu);

    // Common denominator: every LHS pole point once, and every pole of T
    // with its multiplicity.
    let mut mults: BTreeMap<BoxCoord, i64> = BTreeMap::new();
    for &s in lhs_coeffs.keys() {
        mults.insert(s, 1);
    }
    for (b, ord) in t.iter() {
        if ord < 0 {
            let e = mults.entry(b).or_insert(0);
            *e = (*e).max(-ord);
        }
    }
    let mut d_all = UPoly::one();
    for (&b, &m) in &mults {
        let c = AlphaRat::from_poly(bracket(b));
        for _ in 0..m {
            d_all = d_all.mul_linear(&c);
        }
    }

    // LHS * d_all.
    let mut lhs = UPoly::zero();
    for (&s, coeff) in &lhs_coeffs {
        let term = d_all.div_linear(&AlphaRat::from_poly(bracket(s)));
        lhs = lhs.add(&term.scale(coeff));
    }

    // (T - 1) * d_all = N * (d_all / D) - d_all, with T = N / D.
    let mut rhs = d_all.clone();
    for (b, ord) in t.iter() {
        let c = AlphaRat::from_poly(bracket(b));
        for _ in 0..ord.abs() {
            if ord > 0 {
                rhs = rhs.mul_linear(&c);
            } else {
                rhs = rhs.div_linear(&c);
            }
        }
    }
    let rhs = rhs.sub(&d_all);

    let holds = lhs == rhs;
    let mut witness = Vec::new();
    if !holds {
        for (&s, coeff) in &lhs_coeffs {
            witness.push(ResidueComparison {
                point: s,
                lhs: coeff.clone(),
                rhs: t.residue_at(s).ok(),
            });
        }
        for (b, ord) in t.iter() {
            if ord < 0 && !lhs_coeffs.contains_key(&b) {
                witness.push(ResidueComparison {
                    point: b,
                    lhs: AlphaRat::zero(),
                    rhs: t.residue_at(b).ok(),
                });
            }
        }
    }
    SumProductReport {
        mu: mu.clone(),
        nu: nu.clone(),
        holds,
        witness,
    }
}

/// The row-column factorization of `T` of a partition around one of its
/// inner corners. The product of the six pieces (numerators direct,
/// denominators inverted) reconstructs `T`, and each piece's support lies
/// in one quadrant relative to the corner.
#[derive(Clone, Debug)]
pub struct ExpansionFactors {
    /// The zero at the origin (the plain factor `u`).
    pub origin: LatticeRational,
    /// The zero at the shifted corner `s+`.
    pub corner: LatticeRational,
    /// Row products relative to `s`: zeros from the row of the reduced
    /// shape, poles from the row of the full shape (upper-left quadrant).
    pub row_num: LatticeRational,
    pub row_den: LatticeRational,
    /// Column products relative to `s` (lower-right quadrant).
    pub col_num: LatticeRational,
    pub col_den: LatticeRational,
}

impl ExpansionFactors {
    pub fn product(&self) -> LatticeRational {
        self.origin
            .mul(&self.corner)
            .mul(&self.row_num)
            .mul(&self.row_den.inv())
            .mul(&self.col_num)
            .mul(&self.col_den.inv())
    }
}

/// Expands `T` of `sigma` as the row-column product relative to the inner
/// corner `s`.
pub fn expansion_relative_to(sigma: &Partition, s: BoxCoord) -> Result<ExpansionFactors> {
    if !sigma.inner_corners().contains(&s) {
        return Err(Error::NotAnInnerCorner {
            x: s.x,
            y: s.y,
            shape: sigma.to_string(),
        });
    }
    let reduced = sigma.without_box(s)?;
    let sp = s.up();
    let origin = LatticeRational::from_factors([(BoxCoord::new(0, 0), 1)]);
    let corner = LatticeRational::from_factors([(sp, 1)]);

    let mut row_num = LatticeRational::one();
    for b in reduced.row_boxes(s) {
        let uh = reduced.upper_hook(b)?;
        row_num.push_factor(sp.sub(uh.as_box()), 1);
    }
    let mut row_den = LatticeRational::one();
    for b in sigma.row_boxes(s) {
        let uh = sigma.upper_hook(b)?;
        row_den.push_factor(sp.sub(uh.as_box()), 1);
    }
    let mut col_num = LatticeRational::one();
    for b in reduced.col_boxes(s) {
        let lh = reduced.lower_hook(b)?;
        col_num.push_factor(sp.add(lh.as_box()), 1);
    }
    let mut col_den = LatticeRational::one();
    for b in sigma.col_boxes(s) {
        let lh = sigma.lower_hook(b)?;
        col_den.push_factor(sp.add(lh.as_box()), 1);
    }
    Ok(ExpansionFactors {
        origin,
        corner,
        row_num,
        row_den,
        col_num,
        col_den,
    })
}

/// Checks both flip identities at the inner corner `t` of `sigma` inside
/// the `m x n` rectangle: a column (resp. row) hook-product ratio in
/// `sigma` equals the corresponding row (resp. column) ratio in the
/// complement, up to the extra pole factor `1/(u-[(m,0)-t])` (resp.
/// `1/(u-[t-(0,n)])`). Hook values index the linear factors, so each side
/// is represented by the lattice multiset of its hook vectors.
pub fn flip_rule_check(sigma: &Partition, t: BoxCoord, m: usize, n: usize) -> Result<bool> {
    let rect = Partition::rectangle(m, n);
    if !rect.contains(sigma) {
        return Err(Error::NotContained {
            mu: sigma.to_string(),
            m,
            n,
        });
    }
    if !sigma.inner_corners().contains(&t) {
        return Err(Error::NotAnInnerCorner {
            x: t.x,
            y: t.y,
            shape: sigma.to_string(),
        });
    }
    let reduced = sigma.without_box(t)?;
    let sbar = sigma.complement(m, n)?;
    let tbar = bar(t, m, n);
    let extended = sbar.with_box(tbar)?;

    // Column products in sigma flip to row products in the complement.
    let mut lhs = LatticeRational::one();
    for b in reduced.col_boxes(t) {
        lhs.push_factor(reduced.upper_hook(b)?.as_box(), 1);
    }
    for b in sigma.col_boxes(t) {
        lhs.push_factor(sigma.upper_hook(b)?.as_box(), -1);
    }
    let mut rhs = LatticeRational::one();
    rhs.push_factor(BoxCoord::new(m as i64, 0).sub(t), -1);
    for b in sbar.row_boxes(tbar) {
        rhs.push_factor(extended.upper_hook(b)?.as_box(), 1);
        rhs.push_factor(sbar.upper_hook(b)?.as_box(), -1);
    }
    let column_rule = lhs == rhs;

    // Row products in sigma flip to column products in the complement.
    let mut lhs = LatticeRational::one();
    for b in reduced.row_boxes(t) {
        lhs.push_factor(reduced.lower_hook(b)?.as_box(), 1);
    }
    for b in sigma.row_boxes(t) {
        lhs.push_factor(sigma.lower_hook(b)?.as_box(), -1);
    }
    let mut rhs = LatticeRational::one();
    rhs.push_factor(t.sub(BoxCoord::new(0, n as i64)), -1);
    for b in sbar.col_boxes(tbar) {
        rhs.push_factor(extended.lower_hook(b)?.as_box(), 1);
        rhs.push_factor(sbar.lower_hook(b)?.as_box(), -1);
    }
    let row_rule = lhs == rhs;

    Ok(column_rule && row_rule)
}

/// Checks the hook mirror rules between `sigma` and its complement in the
/// `m x n` rectangle: for an inner corner `t` and an outer corner `s` of
/// `sigma` (inside the rectangle), the hook vectors of `sigma` at
/// `join(s,t)` match those of the complement at `join(sbar,tbar)`; and for
/// another inner corner `w`, the hooks of `sigma` minus `t` at `join(w,t)`
/// match those of the complement plus `tbar` at `join(wbar,tbar)`.
pub fn mirror_rule_check(sigma: &Partition, m: usize, n: usize) -> Result<bool> {
    let rect = Partition::rectangle(m, n);
    if !rect.contains(sigma) {
        return Err(Error::NotContained {
            mu: sigma.to_string(),
            m,
            n,
        });
    }
    let sbar = sigma.complement(m, n)?;
    for t in sigma.inner_corners() {
        let tbar = bar(t, m, n);
        for s in sigma.outer_corners() {
            if s.x >= m as i64 || s.y >= n as i64 {
                continue;
            }
            let p = join(s, t);
            let q = join(bar(s, m, n), tbar);
            if sigma.upper_hook(p)? != sbar.upper_hook(q)?
                || sigma.lower_hook(p)? != sbar.lower_hook(q)?
            {
                return Ok(false);
            }
        }
        let reduced = sigma.without_box(t)?;
        let extended = sbar.with_box(tbar)?;
        for w in sigma.inner_corners() {
            if w == t {
                continue;
            }
            let p = join(w, t);
            let q = join(bar(w, m, n), tbar);
            if reduced.upper_hook(p)? != extended.upper_hook(q)?
                || reduced.lower_hook(p)? != extended.lower_hook(q)?
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The three-quadrant factorization of `T` of `mu * complement(mu)` around
/// the box `(m-1, n-1)`:
///
/// 1. `prod_{b in mu} (u-[b]) / (u-[bbar])`;
/// 2. the lower-hook factor over the complement, with denominator hooks
///    of the full rectangle at `vflip(b)`;
/// 3. the upper-hook factor over `mu`, with denominator hooks of the full
///    rectangle at `hflip(b)`.
///
/// Their product is `T` of the star product, and each factor is invariant
/// under exchanging `mu` with its complement.
pub fn mumu_quadrants(mu: &Partition, m: usize, n: usize) -> Result<[LatticeRational; 3]> {
    let rect = Partition::rectangle(m, n);
    if !rect.contains(mu) {
        return Err(Error::NotContained {
            mu: mu.to_string(),
            m,
            n,
        });
    }
    let mubar = mu.complement(m, n)?;
    let vminus = BoxCoord::new(m as i64 - 1, n as i64 - 1);

    let mut f1 = LatticeRational::one();
    for b in mu.boxes() {
        f1.push_factor(b, 1);
        f1.push_factor(bar(b, m, n), -1);
    }
    let mut f2 = LatticeRational::one();
    for b in mubar.boxes() {
        f2.push_factor(vminus.sub(mubar.lower_hook(b)?.as_box()), 1);
        f2.push_factor(vminus.sub(rect.lower_hook(vflip(b, m, n))?.as_box()), -1);
    }
    let mut f3 = LatticeRational::one();
    for b in mu.boxes() {
        f3.push_factor(vminus.add(mu.upper_hook(b)?.as_box()), 1);
        f3.push_factor(vminus.add(rect.upper_hook(hflip(b, m, n))?.as_box()), -1);
    }
    Ok([f1, f2, f3])
}

/// Outcome of the union factorization identity
/// `g_{mu, sbar}^{mu cup m^n} = g_{sigma, sbar}^{m^n} * prod_{b in mu/sigma} T_{sbar}([bbar])`,
/// with both sides computed independently.
#[derive(Clone, Debug)]
pub struct UnionFactorizationReport {
    pub holds: bool,
    pub lhs: AlphaRat,
    pub rhs: AlphaRat,
}

/// Verifies the union factorization identity for a generic shape.
pub fn union_factorization_check(
    mu: &Partition,
    m: usize,
    n: usize,
) -> Result<UnionFactorizationReport> {
    let d = decompose_wrt_rectangle(mu, m, n)?;
    let rect = Partition::rectangle(m, n);
    let lambda = mu.union(&rect);

    let lhs = structure_constant(mu, &d.sigma_bar, &lambda);
    let mut rhs = structure_constant(&d.sigma, &d.sigma_bar, &rect);
    let t_sbar = t_partition(&d.sigma_bar);
    for &b in d.mu1.iter().chain(d.mu3.iter()) {
        rhs = &rhs * &t_sbar.value_at(bar(b, m, n))?;
    }
    Ok(UnionFactorizationReport {
        holds: lhs == rhs,
        lhs,
        rhs,
    })
}

/// `g_{mu nu}^lambda` via inner products.
fn structure_constant(mu: &Partition, nu: &Partition, lambda: &Partition) -> AlphaRat {
    let prod = jack_j_powersum(mu).mul(&jack_j_powersum(nu));
    let inner = hall_inner(&prod, &jack_j_powersum(lambda));
    &inner / &AlphaRat::from_poly(jack_norm_from_inner(lambda))
}

/// Evaluates `T` of the complement partition at the reflected outer-corner
/// point `[(m,n) - s+]` through the hook-ratio formula, cross-checking the
/// result against direct evaluation.
///
/// `s` must be an outer corner of `mu` lying outside the rectangle; the
/// evaluation point must be regular (a pole signals a non-generic
/// configuration).
pub fn t_box_factor(mu: &Partition, s: BoxCoord, m: usize, n: usize) -> Result<AlphaRat> {
    if !mu.outer_corners().contains(&s) {
        return Err(Error::NotAnOuterCorner {
            x: s.x,
            y: s.y,
            shape: mu.to_string(),
        });
    }
    if s.x < m as i64 && s.y < n as i64 {
        return Err(Error::NotContained {
            mu: format!("outer corner {s} must lie outside the rectangle"),
            m,
            n,
        });
    }
    let d = decompose_wrt_rectangle(mu, m, n)?;
    let rect = Partition::rectangle(m, n);
    let mu_plus = mu.with_box(s)?;
    let lam = mu.union(&rect);
    let lam_plus = mu_plus.union(&rect);

    let row_upper = |shape: &Partition| -> Result<AlphaPoly> {
        let mut p = AlphaPoly::one();
        for b in shape.row_boxes(s) {
            p = &p * &shape.upper_hook(b)?.value();
        }
        Ok(p)
    };
    let col_lower = |shape: &Partition| -> Result<AlphaPoly> {
        let mut p = AlphaPoly::one();
        for b in shape.col_boxes(s) {
            p = &p * &shape.lower_hook(b)?.value();
        }
        Ok(p)
    };

    let num = &AlphaRat::new(row_upper(&lam)?, row_upper(&lam_plus)?)?
        * &AlphaRat::new(col_lower(&lam)?, col_lower(&lam_plus)?)?;
    let den = &AlphaRat::new(row_upper(mu)?, row_upper(&mu_plus)?)?
        * &AlphaRat::new(col_lower(mu)?, col_lower(&mu_plus)?)?;
    let value = num.checked_div(&den)?;

    let direct = t_partition(&d.sigma_bar).value_at(bar(s, m, n))?;
    assert_eq!(value, direct, "hook ratio disagrees with direct evaluation");
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alpha::rat;
    use crate::lr::stanley_coeff;
    use crate::partition::partitions_of;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn t_box_shape() {
        let t = t_box(BoxCoord::new(0, 0));
        assert_eq!(t.order_at(BoxCoord::new(0, 0)), 1);
        assert_eq!(t.order_at(BoxCoord::new(1, 1)), 1);
        assert_eq!(t.order_at(BoxCoord::new(1, 0)), -1);
        assert_eq!(t.order_at(BoxCoord::new(0, 1)), -1);

        let sq = t.mul(&t);
        assert_eq!(sq.order_at(BoxCoord::new(0, 0)), 2);
        assert_eq!(sq.order_at(BoxCoord::new(1, 0)), -2);

        let ms: BoxMultiset = [BoxCoord::new(0, 0)].into_iter().collect();
        assert_eq!(t_gamma(&ms), t);
    }

    #[test]
    fn t_partition_matches_example() {
        let t = t_partition(&p(&[3, 3, 1]));
        let zeros: Vec<BoxCoord> = t.zeros().into_iter().map(|(b, _)| b).collect();
        let poles: Vec<BoxCoord> = t.poles().into_iter().map(|(b, _)| b).collect();
        assert_eq!(
            zeros,
            vec![BoxCoord::new(0, 0), BoxCoord::new(1, 3), BoxCoord::new(3, 2)]
        );
        assert_eq!(
            poles,
            vec![BoxCoord::new(0, 3), BoxCoord::new(1, 2), BoxCoord::new(3, 0)]
        );

        assert!(t_partition(&Partition::empty()).is_one());
        assert_eq!(t_partition(&p(&[1])), t_box(BoxCoord::new(0, 0)));
    }

    #[test]
    fn t_partition_equals_t_gamma() {
        for n in 0..=10 {
            for mu in partitions_of(n) {
                let direct: BoxMultiset = mu.boxes().collect();
                assert_eq!(t_gamma(&direct), t_partition(&mu), "{mu}");
            }
        }
    }

    #[test]
    fn star_t_has_double_zero_in_example() {
        let t = t_star(&p(&[3, 3, 1]), &p(&[4, 4, 3, 1, 1]));
        assert!(t.iter().any(|(_, o)| o == 2));
        assert!(t_star(&p(&[2, 1]), &Partition::empty()).is_one());
    }

    #[test]
    fn row_column_balance() {
        for (mu, nu) in [(p(&[3, 1]), p(&[2, 2])), (p(&[4, 2, 1]), p(&[1, 1]))] {
            let t = t_star(&mu, &nu);
            let mut by_row: BTreeMap<i64, i64> = BTreeMap::new();
            let mut by_col: BTreeMap<i64, i64> = BTreeMap::new();
            for (b, o) in t.iter() {
                *by_row.entry(b.y).or_insert(0) += o;
                *by_col.entry(b.x).or_insert(0) += o;
            }
            assert!(by_row.values().all(|&v| v == 0));
            assert!(by_col.values().all(|&v| v == 0));
        }
    }

    #[test]
    fn order_formula_bridge() {
        // Single box: pole of order one at (1,0).
        assert_eq!(order_formula(&p(&[1]), &p(&[1]), BoxCoord::new(1, 0)), 1);
        assert_eq!(
            order_formula(&p(&[1]), &p(&[1]), BoxCoord::new(1, 0)),
            -t_star(&p(&[1]), &p(&[1])).order_at(BoxCoord::new(1, 0))
        );

        let mu = p(&[3, 3, 1]);
        let nu = p(&[4, 4, 3, 1, 1]);
        let t = t_star(&mu, &nu);
        for x in -2..10 {
            for y in -2..10 {
                let s = BoxCoord::new(x, y);
                assert_eq!(order_formula(&mu, &nu, s), -t.order_at(s), "at {s}");
            }
        }
    }

    #[test]
    fn residues_and_values() {
        let t = t_box(BoxCoord::new(0, 0));
        // alpha * 1 / (alpha + 1)
        let r = t.residue_at(BoxCoord::new(1, 0)).unwrap();
        let want = AlphaRat::new(
            AlphaPoly::from_coeffs(vec![rat(0), rat(1)]),
            AlphaPoly::from_coeffs(vec![rat(1), rat(1)]),
        )
        .unwrap();
        assert_eq!(r, want);

        assert!(matches!(
            t.residue_at(BoxCoord::new(0, 0)),
            Err(Error::NotASimplePole { .. })
        ));

        let t331 = t_partition(&p(&[3, 3, 1]));
        let v = t331.value_at(BoxCoord::new(5, 5)).unwrap();
        assert!(!v.is_zero());
        assert!(matches!(
            t331.value_at(BoxCoord::new(0, 0)),
            Err(Error::NotARegularPoint { .. })
        ));
    }

    #[test]
    fn sum_product_small_cases() {
        for (mu, nu) in [
            (p(&[1]), p(&[1])),
            (p(&[1]), Partition::empty()),
            (p(&[2]), p(&[1])),
            (p(&[2, 1]), p(&[1, 1])),
        ] {
            let report = verify_sum_product(&mu, &nu);
            assert!(report.holds, "sum-product failed for {mu}, {nu}");
        }
    }

    #[test]
    fn expansion_lemma_cases() {
        // sigma = (1): reduces to u (u - [1,1]) / ((u-[1,0]) (u-[0,1])).
        let f = expansion_relative_to(&p(&[1]), BoxCoord::new(0, 0)).unwrap();
        assert_eq!(f.product(), t_partition(&p(&[1])));

        for sigma in [p(&[3, 3, 1]), p(&[7, 4, 2, 2, 1])] {
            for s in sigma.inner_corners() {
                let f = expansion_relative_to(&sigma, s).unwrap();
                assert_eq!(f.product(), t_partition(&sigma), "{sigma} at {s}");
                // Quadrant containment relative to s.
                for (b, _) in f.row_num.iter().chain(f.row_den.iter()) {
                    assert!(b.x <= s.x && b.y > s.y);
                }
                for (b, _) in f.col_num.iter().chain(f.col_den.iter()) {
                    assert!(b.x > s.x && b.y <= s.y);
                }
            }
        }

        assert!(expansion_relative_to(&p(&[2]), BoxCoord::new(0, 0)).is_err());
    }

    #[test]
    fn flip_rules_small() {
        // Smallest case: sigma = (1) inside 2x2.
        assert!(flip_rule_check(&p(&[1]), BoxCoord::new(0, 0), 2, 2).unwrap());
        // All shapes inside 3x3.
        for sigma in crate::partition::partitions_in_rectangle(3, 3) {
            for t in sigma.inner_corners() {
                assert!(flip_rule_check(&sigma, t, 3, 3).unwrap(), "{sigma} at {t}");
            }
        }
    }

    #[test]
    fn mirror_rules_small() {
        for sigma in crate::partition::partitions_in_rectangle(3, 3) {
            assert!(mirror_rule_check(&sigma, 3, 3).unwrap(), "{sigma}");
        }
    }

    #[test]
    fn quadrant_decomposition_small() {
        for mu in crate::partition::partitions_in_rectangle(3, 3) {
            let fs = mumu_quadrants(&mu, 3, 3).unwrap();
            let mubar = mu.complement(3, 3).unwrap();
            let product = fs[0].mul(&fs[1]).mul(&fs[2]);
            assert_eq!(product, t_star(&mu, &mubar), "{mu}");
            let gs = mumu_quadrants(&mubar, 3, 3).unwrap();
            for i in 0..3 {
                assert_eq!(fs[i], gs[i], "{mu} factor {i}");
            }
        }
    }

    #[test]
    fn rectangular_residue_recovers_structure_coefficient() {
        // mu = (1) inside the 2x1 rectangle: residue times norm times the
        // origin-product correction gives <J_1 J_1, J_2> = 2 alpha^2.
        let mu = p(&[1]);
        let m = 2;
        let n = 1;
        let mubar = mu.complement(m, n).unwrap();
        let t = t_star(&mu, &mubar);
        let vminus = BoxCoord::new(m as i64 - 1, n as i64 - 1);
        let res = t.residue_at(vminus).unwrap();
        let rect = Partition::rectangle(m, n);
        let norm = AlphaRat::from_poly(crate::jack::jack_norm(&rect));
        let correction = AlphaRat::new(
            &crate::lr::varpi(&mu) * &crate::lr::varpi(&mubar),
            crate::lr::varpi(&rect),
        )
        .unwrap();
        let got = &(&res * &norm) * &correction;
        let want = AlphaRat::from_poly(AlphaPoly::from_coeffs(vec![rat(0), rat(0), rat(2)]));
        assert_eq!(got, want);
        assert_eq!(
            got,
            stanley_coeff(&mu, &mubar, &rect).unwrap()
        );
    }

    #[test]
    fn union_factorization_small() {
        // Smallest non-rectangular union: mu = (2,1) against the 1x1 square.
        let r = union_factorization_check(&p(&[2, 1]), 1, 1).unwrap();
        assert!(r.holds);

        // Rectangular reduction: mu inside the rectangle.
        let r = union_factorization_check(&p(&[2, 1]), 2, 2).unwrap();
        assert!(r.holds);
    }

    #[test]
    fn t_box_factor_matches_direct() {
        let mu = p(&[3, 1]);
        // Outer corner to the right of the 2x2 rectangle.
        let s = BoxCoord::new(3, 0);
        assert!(mu.outer_corners().contains(&s));
        let v = t_box_factor(&mu, s, 2, 2).unwrap();
        assert!(!v.is_zero());

        let inside = BoxCoord::new(1, 1);
        assert!(t_box_factor(&mu, inside, 2, 2).is_err());
    }
}
