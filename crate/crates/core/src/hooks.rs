//! Upper/lower hook assignments over Young diagrams and the structure
//! coefficients they compute: the Pieri rule, the rectangular case, and
//! the rectangular-union case, plus an exhaustive balanced-assignment
//! search.

use std::collections::BTreeMap;
use std::fmt;

use crate::alpha::{AlphaPoly, AlphaRat};
use crate::error::{Error, Result};
use crate::partition::{decompose_wrt_rectangle, vflip, BoxCoord, Partition};

/// Choice of hook flavor for one box.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HookChoice {
    U,
    L,
}

impl fmt::Display for HookChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HookChoice::U => write!(f, "U"),
            HookChoice::L => write!(f, "L"),
        }
    }
}

/// Which of the two printed solutions to use for rectangular shapes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Variant {
    A,
    B,
}

/// A choice of upper or lower hook for every box of one diagram.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HookAssignment {
    shape: Partition,
    choices: BTreeMap<BoxCoord, HookChoice>,
}

impl HookAssignment {
    /// Builds from explicit choices; the domain must be exactly the boxes
    /// of the shape.
    pub fn new(shape: Partition, choices: BTreeMap<BoxCoord, HookChoice>) -> Result<Self> {
        for b in shape.boxes() {
            if !choices.contains_key(&b) {
                return Err(Error::BoxNotInDiagram {
                    x: b.x,
                    y: b.y,
                    shape: format!("assignment domain for {shape}"),
                });
            }
        }
        if choices.len() != shape.size() {
            let extra = choices.keys().find(|b| !shape.contains_box(**b)).unwrap();
            return Err(Error::BoxNotInDiagram {
                x: extra.x,
                y: extra.y,
                shape: shape.to_string(),
            });
        }
        Ok(HookAssignment { shape, choices })
    }

    /// Assigns via a rule evaluated on every box.
    pub fn from_rule(shape: Partition, rule: impl Fn(BoxCoord) -> HookChoice) -> Self {
        let choices = shape.boxes().map(|b| (b, rule(b))).collect();
        HookAssignment { shape, choices }
    }

    pub fn uniform(shape: Partition, choice: HookChoice) -> Self {
        HookAssignment::from_rule(shape, |_| choice)
    }

    /// Parses rows printed top-to-bottom, letters separated by whitespace.
    pub fn from_rows(shape: Partition, rows: &[&str]) -> Result<Self> {
        let mut choices = BTreeMap::new();
        let height = shape.len();
        for (i, row) in rows.iter().enumerate() {
            let y = height as i64 - 1 - i as i64;
            for (x, tok) in row.split_whitespace().enumerate() {
                let c = match tok {
                    "U" => HookChoice::U,
                    "L" => HookChoice::L,
                    _ => {
                        return Err(Error::ParsePartition {
                            input: row.to_string(),
                            reason: "rows must contain U and L letters".into(),
                        })
                    }
                };
                choices.insert(BoxCoord::new(x as i64, y), c);
            }
        }
        HookAssignment::new(shape, choices)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn choice(&self, b: BoxCoord) -> Option<HookChoice> {
        self.choices.get(&b).copied()
    }

    pub fn choices(&self) -> &BTreeMap<BoxCoord, HookChoice> {
        &self.choices
    }

    /// Product of the chosen hook values over all boxes.
    pub fn value(&self) -> AlphaPoly {
        let mut prod = AlphaPoly::one();
        for (&b, &c) in &self.choices {
            let hook = match c {
                HookChoice::U => self.shape.upper_hook(b).unwrap(),
                HookChoice::L => self.shape.lower_hook(b).unwrap(),
            };
            prod = &prod * &hook.value();
        }
        prod
    }

    /// Exchanges upper and lower hooks everywhere.
    pub fn flipped(&self) -> HookAssignment {
        HookAssignment {
            shape: self.shape.clone(),
            choices: self
                .choices
                .iter()
                .map(|(&b, &c)| {
                    let f = match c {
                        HookChoice::U => HookChoice::L,
                        HookChoice::L => HookChoice::U,
                    };
                    (b, f)
                })
                .collect(),
        }
    }

    /// Counts of (upper, lower) choices.
    pub fn counts(&self) -> (usize, usize) {
        let u = self
            .choices
            .values()
            .filter(|&&c| c == HookChoice::U)
            .count();
        (u, self.choices.len() - u)
    }

    /// Grid rendering with rows printed top-to-bottom.
    pub fn grid(&self) -> String {
        let mut lines = Vec::new();
        for y in (0..self.shape.len()).rev() {
            let len = self.shape.row_len(y);
            let row: Vec<String> = (0..len)
                .map(|x| {
                    self.choices[&BoxCoord::new(x as i64, y as i64)].to_string()
                })
                .collect();
            lines.push(row.join(" "));
        }
        lines.join("\n")
    }
}

/// A triple of hook assignments whose joint product is a Stanley
/// structure coefficient.
#[derive(Clone, Debug)]
pub struct StanleyProduct {
    pub mu_factor: HookAssignment,
    pub nu_factor: HookAssignment,
    pub lambda_factor: HookAssignment,
    pub value: AlphaPoly,
}

impl StanleyProduct {
    pub fn new(
        mu_factor: HookAssignment,
        nu_factor: HookAssignment,
        lambda_factor: HookAssignment,
    ) -> Self {
        let value = evaluate_assignment(&[&mu_factor, &nu_factor, &lambda_factor]);
        StanleyProduct {
            mu_factor,
            nu_factor,
            lambda_factor,
            value,
        }
    }

    /// The balance property: upper and lower hooks each chosen exactly
    /// `|lambda|` times across the three diagrams.
    pub fn is_balanced(&self) -> bool {
        let (u1, l1) = self.mu_factor.counts();
        let (u2, l2) = self.nu_factor.counts();
        let (u3, l3) = self.lambda_factor.counts();
        let target = self.lambda_factor.shape().size();
        u1 + u2 + u3 == target && l1 + l2 + l3 == target
    }

    /// The fraction form: numerator factors unchanged, the third factor
    /// flipped and moved to the denominator. Its value is the
    /// Littlewood-Richardson coefficient when the product form is the
    /// Stanley coefficient.
    pub fn as_lr_fraction(&self) -> LrHookFraction {
        LrHookFraction {
            numerator: vec![self.mu_factor.clone(), self.nu_factor.clone()],
            denominator: self.lambda_factor.flipped(),
        }
    }
}

/// A ratio of hook products: assignments multiplied in the numerator over
/// one denominator assignment.
#[derive(Clone, Debug)]
pub struct LrHookFraction {
    pub numerator: Vec<HookAssignment>,
    pub denominator: HookAssignment,
}

impl LrHookFraction {
    pub fn value(&self) -> AlphaRat {
        let mut num = AlphaPoly::one();
        for a in &self.numerator {
            num = &num * &a.value();
        }
        AlphaRat::new(num, self.denominator.value()).expect("hook products are nonzero")
    }
}

/// Product of chosen hook values over several assignments.
pub fn evaluate_assignment(factors: &[&HookAssignment]) -> AlphaPoly {
    let mut prod = AlphaPoly::one();
    for f in factors {
        prod = &prod * &f.value();
    }
    prod
}

/// Hook assignment computing `<J_mu J_(r), J_lambda>` for a horizontal
/// `r`-strip `lambda/mu`: boxes of `mu` take the lower hook unless the
/// strip meets their column; the row `(r)` takes all upper hooks; boxes of
/// `lambda` follow the opposite rule.
pub fn pieri_assignment(mu: &Partition, lambda: &Partition, r: usize) -> Result<StanleyProduct> {
    if lambda.size() != mu.size() + r || !lambda.horizontal_strip_over(mu) {
        return Err(Error::NotAHorizontalStrip {
            mu: mu.to_string(),
            lambda: lambda.to_string(),
            r,
        });
    }
    let strip_cols: std::collections::BTreeSet<i64> = lambda
        .boxes()
        .filter(|b| !mu.contains_box(*b))
        .map(|b| b.x)
        .collect();
    let mu_factor = HookAssignment::from_rule(mu.clone(), |b| {
        if strip_cols.contains(&b.x) {
            HookChoice::U
        } else {
            HookChoice::L
        }
    });
    let nu_factor = HookAssignment::uniform(
        Partition::new(if r == 0 { vec![] } else { vec![r] }),
        HookChoice::U,
    );
    let lambda_factor = HookAssignment::from_rule(lambda.clone(), |b| {
        if strip_cols.contains(&b.x) {
            HookChoice::L
        } else {
            HookChoice::U
        }
    });
    Ok(StanleyProduct::new(mu_factor, nu_factor, lambda_factor))
}

/// Hook assignment computing `<J_mu J_mubar, J_{m^n}>` for `mu` inside the
/// rectangle.
///
/// Variant A: all lower hooks on `mu`, all upper hooks on the complement,
/// and on the rectangle an upper hook exactly when the vertically flipped
/// box lies in `mu`. Variant B exchanges the roles of `mu` and its
/// complement; both give the same value.
pub fn rectangular_assignment(
    mu: &Partition,
    m: usize,
    n: usize,
    variant: Variant,
) -> Result<StanleyProduct> {
    let rect = Partition::rectangle(m, n);
    if !rect.contains(mu) {
        return Err(Error::NotContained {
            mu: mu.to_string(),
            m,
            n,
        });
    }
    let mubar = mu.complement(m, n)?;
    let (mu_choice, bar_choice) = match variant {
        Variant::A => (HookChoice::L, HookChoice::U),
        Variant::B => (HookChoice::U, HookChoice::L),
    };
    let pattern = match variant {
        Variant::A => mu.clone(),
        Variant::B => mubar.clone(),
    };
    let mu_factor = HookAssignment::uniform(mu.clone(), mu_choice);
    let bar_factor = HookAssignment::uniform(mubar, bar_choice);
    let rect_factor = HookAssignment::from_rule(rect, |b| {
        if pattern.contains_box(vflip(b, m, n)) {
            HookChoice::U
        } else {
            HookChoice::L
        }
    });
    Ok(StanleyProduct::new(mu_factor, bar_factor, rect_factor))
}

/// The fraction form of the rectangular Littlewood-Richardson
/// coefficient: numerator hooks as in the Stanley form, denominator on
/// the rectangle with hooks flipped.
pub fn rectangular_lr(
    mu: &Partition,
    m: usize,
    n: usize,
    variant: Variant,
) -> Result<LrHookFraction> {
    Ok(rectangular_assignment(mu, m, n, variant)?.as_lr_fraction())
}

/// Hook assignment computing `<J_mu J_sbar, J_{mu cup m^n}>` for a
/// generic shape `mu` against the rectangle `m^n`, where `sbar` is the
/// complement of `mu`'s intersection with the rectangle.
///
/// Region rules (variant A), with `r`, `c`, `K = k^l` from the rectangle
/// decomposition of `mu`:
/// - the `sbar` factor takes all upper hooks;
/// - `mu` takes upper hooks on rows below `r` and lower hooks elsewhere;
/// - the union shape takes lower hooks on rows below `r`, upper hooks on
///   columns left of `c`, and inside `K` the rectangular pattern driven by
///   the flipped membership of `mu`'s K-part.
///
/// Variant B instead installs the swapped rectangular solution inside the
/// `K` regions. Both variants evaluate to the Stanley coefficient, and
/// the assignment reduces to [`rectangular_assignment`] when `mu` fits in
/// the rectangle.
pub fn rect_union_assignment(
    mu: &Partition,
    m: usize,
    n: usize,
    variant: Variant,
) -> Result<StanleyProduct> {
    let d = decompose_wrt_rectangle(mu, m, n)?;
    let rect = Partition::rectangle(m, n);
    let lambda = mu.union(&rect);
    let (c, r, l) = (d.c as i64, d.r as i64, d.l as i64);
    let mu2 = d.mu2.clone();
    let mu2bar = d.mu2.complement(d.k, d.l)?;

    let in_k_pattern = match variant {
        Variant::A => mu2.clone(),
        Variant::B => mu2bar,
    };

    let sbar_choice = match variant {
        Variant::A => HookChoice::U,
        Variant::B => HookChoice::L,
    };
    let sbar_factor = HookAssignment::uniform(d.sigma_bar.clone(), sbar_choice);

    let mu_in_k = match variant {
        Variant::A => HookChoice::L,
        Variant::B => HookChoice::U,
    };
    let mu_factor = HookAssignment::from_rule(mu.clone(), |b| {
        if b.y < r {
            HookChoice::U
        } else if b.x >= c {
            mu_in_k
        } else {
            HookChoice::L
        }
    });

    let lambda_factor = HookAssignment::from_rule(lambda.clone(), |b| {
        if b.y < r {
            HookChoice::L
        } else if b.x < c {
            HookChoice::U
        } else {
            // Inside K: rectangular pattern in K-local coordinates.
            let local = BoxCoord::new(b.x - c, l - 1 - (b.y - r));
            if in_k_pattern.contains_box(local) {
                HookChoice::U
            } else {
                HookChoice::L
            }
        }
    });

    Ok(StanleyProduct::new(mu_factor, sbar_factor, lambda_factor))
}

/// Fraction form of the rectangular-union Littlewood-Richardson
/// coefficient.
pub fn rect_union_lr(
    mu: &Partition,
    m: usize,
    n: usize,
    variant: Variant,
) -> Result<LrHookFraction> {
    Ok(rect_union_assignment(mu, m, n, variant)?.as_lr_fraction())
}

/// The factored form of the rectangular-union coefficient: an explicit
/// hook prefactor `F` times the rectangular coefficient of the K-region.
///
/// `F` multiplies lower hooks over the boxes left of `K` (columns `< c`,
/// rows `r..n`) and upper hooks over the boxes below `K` (rows `< r`,
/// columns `c..m`), in `mu` for the numerator and in the union shape for
/// the denominator; hooks over the remaining regions cancel between the
/// two and are omitted.
#[derive(Clone, Debug)]
pub struct UnionFactoredForm {
    /// (box, hook value) pairs for the numerator (`mu`) hooks of `F`.
    pub mu_hooks: Vec<(BoxCoord, AlphaPoly)>,
    /// (box, hook value) pairs for the denominator (union shape) hooks.
    pub lambda_hooks: Vec<(BoxCoord, AlphaPoly)>,
    /// Value of the prefactor `F`.
    pub f_value: AlphaRat,
    /// The inner rectangular coefficient `g_{mu2, mu2bar}^{k^l}`.
    pub inner_lr: AlphaRat,
    /// `K`-region dimensions.
    pub k: usize,
    pub l: usize,
    pub mu2: Partition,
}

pub fn union_factored_form(mu: &Partition, m: usize, n: usize) -> Result<UnionFactoredForm> {
    let d = decompose_wrt_rectangle(mu, m, n)?;
    let rect = Partition::rectangle(m, n);
    let lambda = mu.union(&rect);
    let (c, r) = (d.c as i64, d.r as i64);

    let left_of_k =
        |b: BoxCoord| -> bool { b.x < c && b.y >= r && b.y < n as i64 };
    let below_k = |b: BoxCoord| -> bool { b.y < r && b.x >= c && b.x < m as i64 };

    let mut mu_hooks = Vec::new();
    let mut lambda_hooks = Vec::new();
    let mut num = AlphaPoly::one();
    let mut den = AlphaPoly::one();
    for b in mu.boxes() {
        if left_of_k(b) {
            let h = mu.lower_hook(b)?.value();
            num = &num * &h;
            mu_hooks.push((b, h));
        } else if below_k(b) {
            let h = mu.upper_hook(b)?.value();
            num = &num * &h;
            mu_hooks.push((b, h));
        }
    }
    for b in lambda.boxes() {
        if left_of_k(b) {
            let h = lambda.lower_hook(b)?.value();
            den = &den * &h;
            lambda_hooks.push((b, h));
        } else if below_k(b) {
            let h = lambda.upper_hook(b)?.value();
            den = &den * &h;
            lambda_hooks.push((b, h));
        }
    }
    let f_value = AlphaRat::new(num, den)?;
    let inner_lr = rectangular_lr(&d.mu2, d.k, d.l, Variant::A)?.value();
    Ok(UnionFactoredForm {
        mu_hooks,
        lambda_hooks,
        f_value: f_value.clone(),
        inner_lr: inner_lr.clone(),
        k: d.k,
        l: d.l,
        mu2: d.mu2,
    })
}

impl UnionFactoredForm {
    /// The product `F * g_inner`.
    pub fn value(&self) -> AlphaRat {
        &self.f_value * &self.inner_lr
    }
}

/// Exhaustively searches balanced hook assignments over the three shapes
/// whose product equals `target`, in deterministic order.
///
/// The search prunes by exact divisibility of the remaining target, so it
/// stays fast for desk-scale shapes; the total box count is still capped.
pub fn balanced_assignment_search(
    mu: &Partition,
    nu: &Partition,
    lambda: &Partition,
    target: &AlphaPoly,
    bound: Option<usize>,
) -> Result<Vec<StanleyProduct>> {
    if mu.size() + nu.size() != lambda.size() {
        return Err(Error::SizeMismatch {
            expected: lambda.size(),
            got: mu.size() + nu.size(),
        });
    }
    let bound = bound.unwrap_or(24);
    let total = mu.size() + nu.size() + lambda.size();
    if total > bound {
        return Err(Error::SearchBoundExceeded { total, bound });
    }
    if target.is_zero() {
        return Ok(Vec::new());
    }

    // Flattened box list: (shape id, box, upper value, lower value).
    let mut boxes: Vec<(usize, BoxCoord, AlphaPoly, AlphaPoly)> = Vec::with_capacity(total);
    for (id, shape) in [mu, nu, lambda].into_iter().enumerate() {
        for b in shape.boxes() {
            boxes.push((
                id,
                b,
                shape.upper_hook(b).unwrap().value(),
                shape.lower_hook(b).unwrap().value(),
            ));
        }
    }
    let u_budget = lambda.size();
    let l_budget = lambda.size();

    let mut picked: Vec<HookChoice> = Vec::with_capacity(total);
    let mut found: Vec<Vec<HookChoice>> = Vec::new();
    search(
        &boxes,
        0,
        target.clone(),
        u_budget,
        l_budget,
        &mut picked,
        &mut found,
    );

    let mut out = Vec::new();
    for choices in found {
        let mut maps: [BTreeMap<BoxCoord, HookChoice>; 3] = Default::default();
        for (i, (id, b, _, _)) in boxes.iter().enumerate() {
            maps[*id].insert(*b, choices[i]);
        }
        let [cm, cn, cl] = maps;
        out.push(StanleyProduct::new(
            HookAssignment::new(mu.clone(), cm)?,
            HookAssignment::new(nu.clone(), cn)?,
            HookAssignment::new(lambda.clone(), cl)?,
        ));
    }
    Ok(out)
}

fn search(
    boxes: &[(usize, BoxCoord, AlphaPoly, AlphaPoly)],
    i: usize,
    remaining: AlphaPoly,
    u_budget: usize,
    l_budget: usize,
    picked: &mut Vec<HookChoice>,
    found: &mut Vec<Vec<HookChoice>>,
) {
    if i == boxes.len() {
        if remaining.is_one() && u_budget == 0 && l_budget == 0 {
            found.push(picked.clone());
        }
        return;
    }
    let (_, _, uh, lh) = &boxes[i];
    if u_budget > 0 {
        if let Some(q) = remaining.div_exact(uh) {
            picked.push(HookChoice::U);
            search(boxes, i + 1, q, u_budget - 1, l_budget, picked, found);
            picked.pop();
        }
    }
    if l_budget > 0 {
        if let Some(q) = remaining.div_exact(lh) {
            picked.push(HookChoice::L);
            search(boxes, i + 1, q, u_budget, l_budget - 1, picked, found);
            picked.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alpha::rat;
    use crate::lr::stanley_coeff;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn ap(coeffs: &[i64]) -> AlphaPoly {
        AlphaPoly::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn evaluate_trivial_and_single() {
        assert!(evaluate_assignment(&[]).is_one());
        let empty = HookAssignment::uniform(Partition::empty(), HookChoice::U);
        assert!(empty.value().is_one());

        // mu = nu = (1) all lower; lambda = (2) all upper: 1 * 1 * 2alpha * alpha.
        let a = HookAssignment::uniform(p(&[1]), HookChoice::L);
        let b = HookAssignment::uniform(p(&[1]), HookChoice::L);
        let c = HookAssignment::uniform(p(&[2]), HookChoice::U);
        let sp = StanleyProduct::new(a, b, c);
        assert_eq!(sp.value, ap(&[0, 0, 2]));
        assert!(sp.is_balanced());
        assert_eq!(
            AlphaRat::from_poly(sp.value.clone()),
            stanley_coeff(&p(&[1]), &p(&[1]), &p(&[2])).unwrap()
        );
    }

    #[test]
    fn worked_product_example() {
        // Three diagrams with printed hook letters; the product is
        // 8 alpha^5 (alpha+3)^2 (alpha+4) (2alpha+1)^2 (2alpha+5)
        //   (3alpha+1) (3alpha+2).
        let a = HookAssignment::from_rows(p(&[3, 2, 1]), &["U", "U U", "U U L"]).unwrap();
        let b = HookAssignment::from_rows(p(&[3, 1]), &["U", "U U U"]).unwrap();
        let c = HookAssignment::from_rows(
            p(&[3, 2, 2, 1, 1]),
            &["L", "L", "L L", "L L", "L L L"],
        )
        .unwrap();
        let got = evaluate_assignment(&[&a, &b, &c]);
        let mut want = ap(&[0, 0, 0, 0, 0, 8]);
        for f in [
            ap(&[3, 1]).pow(2),
            ap(&[4, 1]),
            ap(&[1, 2]).pow(2),
            ap(&[5, 2]),
            ap(&[1, 3]),
            ap(&[2, 3]),
        ] {
            want = &want * &f;
        }
        assert_eq!(got, want);
    }

    #[test]
    fn pieri_single_box() {
        let sp = pieri_assignment(&p(&[1]), &p(&[2]), 1).unwrap();
        // mu box is in a different column from the strip box: lower hook.
        assert_eq!(sp.mu_factor.choice(BoxCoord::new(0, 0)), Some(HookChoice::L));
        assert_eq!(sp.value, ap(&[0, 0, 2]));
        assert!(sp.is_balanced());

        // Empty mu reduces to the norm-like product over a single row.
        let sp = pieri_assignment(&Partition::empty(), &p(&[3]), 3).unwrap();
        assert_eq!(
            AlphaRat::from_poly(sp.value.clone()),
            stanley_coeff(&Partition::empty(), &p(&[3]), &p(&[3])).unwrap()
        );

        // A single added box is a horizontal strip even when stacked.
        let sp = pieri_assignment(&p(&[1]), &p(&[1, 1]), 1).unwrap();
        assert_eq!(sp.value, ap(&[0, 0, 2]));

        assert!(pieri_assignment(&p(&[1]), &p(&[2, 2]), 3).is_err());
    }

    #[test]
    fn pieri_matches_oracle_small() {
        for n in 1..=5usize {
            for lambda in crate::partition::partitions_of(n) {
                for k in 0..=n {
                    for mu in crate::partition::partitions_of(n - k) {
                        if !lambda.horizontal_strip_over(&mu) {
                            continue;
                        }
                        let sp = pieri_assignment(&mu, &lambda, k).unwrap();
                        let want = stanley_coeff(&mu, &Partition::new(if k == 0 { vec![] } else { vec![k] }), &lambda)
                            .unwrap();
                        assert_eq!(AlphaRat::from_poly(sp.value.clone()), want, "{mu} -> {lambda}");
                        assert!(sp.is_balanced());
                    }
                }
            }
        }
    }

    #[test]
    fn rectangular_grid_fixture() {
        // The printed pattern for mu = 211 inside 3x3.
        let sp = rectangular_assignment(&p(&[2, 1, 1]), 3, 3, Variant::A).unwrap();
        assert_eq!(sp.mu_factor.grid(), "L\nL\nL L");
        assert_eq!(sp.nu_factor.grid(), "U\nU U\nU U");
        assert_eq!(sp.lambda_factor.grid(), "U U L\nU L L\nU L L");
        assert!(sp.is_balanced());
        assert_eq!(
            AlphaRat::from_poly(sp.value.clone()),
            stanley_coeff(&p(&[2, 1, 1]), &p(&[2, 2, 1]), &Partition::rectangle(3, 3)).unwrap()
        );
    }

    #[test]
    fn rectangular_small_oracle() {
        let sp = rectangular_assignment(&p(&[1]), 2, 1, Variant::A).unwrap();
        assert_eq!(sp.value, ap(&[0, 0, 2]));

        for mu in crate::partition::partitions_in_rectangle(2, 2) {
            let a = rectangular_assignment(&mu, 2, 2, Variant::A).unwrap();
            let b = rectangular_assignment(&mu, 2, 2, Variant::B).unwrap();
            assert_eq!(a.value, b.value, "{mu}");
            let mubar = mu.complement(2, 2).unwrap();
            let want = stanley_coeff(&mu, &mubar, &Partition::rectangle(2, 2)).unwrap();
            assert_eq!(AlphaRat::from_poly(a.value.clone()), want, "{mu}");
        }

        assert!(rectangular_assignment(&p(&[3]), 2, 2, Variant::A).is_err());
    }

    #[test]
    fn rect_union_grids_fixture() {
        // mu = 42211 against 3^4: the three printed diagrams.
        let sp = rect_union_assignment(&p(&[4, 2, 2, 1, 1]), 3, 4, Variant::A).unwrap();
        assert_eq!(sp.mu_factor.grid(), "L\nL\nL L\nL L\nU U U U");
        assert_eq!(sp.nu_factor.grid(), "U\nU\nU U");
        assert_eq!(
            sp.lambda_factor.grid(),
            "U\nU U L\nU U L\nU L L\nL L L L"
        );
        assert!(sp.is_balanced());
    }

    #[test]
    fn rect_union_reduces_to_rectangular() {
        for mu in crate::partition::partitions_in_rectangle(3, 2) {
            let a = rect_union_assignment(&mu, 3, 2, Variant::A).unwrap();
            let b = rectangular_assignment(&mu, 3, 2, Variant::A).unwrap();
            assert_eq!(a.mu_factor, b.mu_factor, "{mu}");
            assert_eq!(a.nu_factor, b.nu_factor, "{mu}");
            assert_eq!(a.lambda_factor, b.lambda_factor, "{mu}");
        }
    }

    #[test]
    fn rect_union_oracle_small() {
        for mu in [p(&[3, 1]), p(&[2, 2, 1]), p(&[4, 1])] {
            let d = decompose_wrt_rectangle(&mu, 2, 2).unwrap();
            let lambda = mu.union(&Partition::rectangle(2, 2));
            for variant in [Variant::A, Variant::B] {
                let sp = rect_union_assignment(&mu, 2, 2, variant).unwrap();
                let want = stanley_coeff(&mu, &d.sigma_bar, &lambda).unwrap();
                assert_eq!(
                    AlphaRat::from_poly(sp.value.clone()),
                    want,
                    "{mu} variant {variant:?}"
                );
                assert!(sp.is_balanced(), "{mu} variant {variant:?}");
            }
        }
    }

    #[test]
    fn union_factored_form_small() {
        // mu inside the rectangle: F = 1, reduces to the rectangular LR.
        let f = union_factored_form(&p(&[2, 1]), 2, 2).unwrap();
        assert!(f.f_value.is_one());
        assert!(f.mu_hooks.is_empty() && f.lambda_hooks.is_empty());

        // Smallest union case.
        let f = union_factored_form(&p(&[2, 1]), 1, 1).unwrap();
        let lr = rect_union_lr(&p(&[2, 1]), 1, 1, Variant::A).unwrap();
        assert_eq!(f.value(), lr.value());
    }

    #[test]
    fn union_factored_form_matches_lr_fraction() {
        // Pure hook identity: F times the inner rectangular coefficient
        // equals the union LR fraction, across all generic desk shapes.
        for m in 1..=4usize {
            for n in 1..=4usize {
                let rect = Partition::rectangle(m, n);
                for size in 0..=9usize {
                    for mu in crate::partition::partitions_of(size) {
                        if decompose_wrt_rectangle(&mu, m, n).is_err() {
                            continue;
                        }
                        if mu.union(&rect).size() > 9 {
                            continue;
                        }
                        let f = union_factored_form(&mu, m, n).unwrap();
                        let lr = rect_union_lr(&mu, m, n, Variant::A).unwrap();
                        assert_eq!(f.value(), lr.value(), "{mu} vs {m}x{n}");
                    }
                }
            }
        }
    }

    #[test]
    fn search_recovers_printed_rectangular_assignment() {
        let mu = p(&[2, 1, 1]);
        let rect = Partition::rectangle(3, 3);
        let target = stanley_coeff(&mu, &p(&[2, 2, 1]), &rect)
            .unwrap()
            .as_poly()
            .cloned()
            .unwrap();
        let found = balanced_assignment_search(&mu, &p(&[2, 2, 1]), &rect, &target, None).unwrap();
        let printed = rectangular_assignment(&mu, 3, 3, Variant::A).unwrap();
        assert!(found.iter().any(|sp| {
            sp.mu_factor == printed.mu_factor
                && sp.nu_factor == printed.nu_factor
                && sp.lambda_factor == printed.lambda_factor
        }));
    }

    #[test]
    fn search_finds_known_assignments() {
        let target = ap(&[0, 0, 2]);
        let found =
            balanced_assignment_search(&p(&[1]), &p(&[1]), &p(&[2]), &target, None).unwrap();
        assert!(!found.is_empty());
        assert!(found.iter().all(|sp| sp.value == target && sp.is_balanced()));
        assert!(found.iter().any(|sp| {
            sp.mu_factor.choice(BoxCoord::new(0, 0)) == Some(HookChoice::L)
                && sp.nu_factor.choice(BoxCoord::new(0, 0)) == Some(HookChoice::L)
                && sp
                    .lambda_factor
                    .choices()
                    .values()
                    .all(|&c| c == HookChoice::U)
        }));

        let none =
            balanced_assignment_search(&p(&[1]), &p(&[1]), &p(&[2]), &AlphaPoly::zero(), None)
                .unwrap();
        assert!(none.is_empty());

        assert!(matches!(
            balanced_assignment_search(
                &p(&[5, 4, 3]),
                &p(&[5, 4, 3]),
                &p(&[9, 8, 7]),
                &AlphaPoly::one(),
                None
            ),
            Err(Error::SearchBoundExceeded { .. })
        ));
    }
}
