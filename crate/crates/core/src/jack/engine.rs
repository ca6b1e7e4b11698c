//! Construction of the integral-form Jack basis by Gram-Schmidt
//! orthogonalization of the monomial basis under the alpha-deformed Hall
//! inner product.
//!
//! Partitions are processed in a linear extension of dominance order
//! (ascending lexicographic by default); each monomial is projected
//! against the previously built Jack functions and the result rescaled so
//! the `m_{1^n}` coefficient equals `n!`. Dominance triangularity makes
//! the outcome independent of which linear extension is used.
//!
//! For small degrees the orthogonalization runs directly over `Q(alpha)`.
//! For larger degrees the same algorithm is evaluated at integer sample
//! points `alpha = 1, 2, ...` and the polynomial coefficients are
//! recovered by exact Newton interpolation, verified at extra sample
//! points; the results are identical and are cross-checked in tests.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::alpha::{rat, AlphaPoly, AlphaRat, Rational};

use super::tables::DegreeTables;

/// Largest degree orthogonalized directly over `Q(alpha)`; beyond this the
/// engine switches to sample-and-interpolate evaluation of the same
/// algorithm.
const SYMBOLIC_MAX: usize = 8;

/// The Jack data for one degree: expansions in the monomial and power-sum
/// bases (indexed by the ascending partition order of [`DegreeTables`])
/// together with the squared norms computed from the inner product.
pub(crate) struct JackTable {
    pub tables: Arc<DegreeTables>,
    /// `m_coeffs[i][j]`: coefficient of `m_{parts[j]}` in `J_{parts[i]}`.
    pub m_coeffs: Vec<Vec<AlphaPoly>>,
    /// `p_coeffs[i][k]`: coefficient of `p_{parts[k]}` in `J_{parts[i]}`.
    pub p_coeffs: Vec<Vec<AlphaPoly>>,
    /// `norms[i] = <J_i, J_i>` accumulated in the power-sum basis.
    pub norms: Vec<AlphaPoly>,
}

fn factorial(n: usize) -> BigInt {
    let mut f = BigInt::one();
    for k in 2..=n {
        f *= BigInt::from(k);
    }
    f
}

pub(crate) fn degree_tables(n: usize) -> Arc<DegreeTables> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<DegreeTables>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    guard
        .entry(n)
        .or_insert_with(|| Arc::new(DegreeTables::build(n)))
        .clone()
}

/// The Jack table for degree `n`, memoized process-wide.
pub(crate) fn jack_table(n: usize) -> Arc<JackTable> {
    if let Some(t) = jack_table_cache().lock().unwrap().get(&n) {
        return t.clone();
    }
    // Serialize builds so concurrent callers do not duplicate the work.
    static BUILD: Mutex<()> = Mutex::new(());
    let _guard = BUILD.lock().unwrap();
    if let Some(t) = jack_table_cache().lock().unwrap().get(&n) {
        return t.clone();
    }
    let built = Arc::new(build_jack_table(n));
    jack_table_cache().lock().unwrap().insert(n, built.clone());
    built
}

/// Installs a precomputed monomial expansion table (for example from a
/// persisted cache), after validating its shape. Power-sum data and norms
/// are recomputed from it.
pub(crate) fn install_jack_table(n: usize, m_coeffs: Vec<Vec<AlphaPoly>>) -> Result<(), String> {
    let t = degree_tables(n);
    let count = t.parts.len();
    if m_coeffs.len() != count || m_coeffs.iter().any(|r| r.len() != count) {
        return Err(format!("expected a {count}x{count} coefficient table"));
    }
    let nfact = AlphaPoly::constant(Rational::from_integer(factorial(n)));
    for (i, row) in m_coeffs.iter().enumerate() {
        if row[t.ones_index()] != nfact {
            return Err(format!(
                "row {i}: coefficient of m_[1^{n}] must be {n}! exactly"
            ));
        }
        for (j, c) in row.iter().enumerate() {
            if !c.is_zero() && !t.parts[j].dominated_by(&t.parts[i]) {
                return Err(format!("row {i}: nonzero coefficient above the diagonal"));
            }
        }
    }
    let table = finish_from_m_coeffs(t, m_coeffs);
    jack_table_cache().lock().unwrap().insert(n, Arc::new(table));
    Ok(())
}

fn jack_table_cache() -> &'static Mutex<HashMap<usize, Arc<JackTable>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<JackTable>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Degrees whose tables are currently memoized, ascending.
pub(crate) fn cached_degrees() -> Vec<usize> {
    let mut v: Vec<usize> = jack_table_cache().lock().unwrap().keys().copied().collect();
    v.sort_unstable();
    v
}

fn build_jack_table(n: usize) -> JackTable {
    let t = degree_tables(n);
    if n <= SYMBOLIC_MAX {
        let order: Vec<usize> = (0..t.parts.len()).collect();
        let p_rows = gram_schmidt_symbolic(&t, &order);
        let p_coeffs: Vec<Vec<AlphaPoly>> = p_rows
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|c| {
                        c.as_poly()
                            .cloned()
                            .expect("Jack power-sum coefficients are polynomials in alpha")
                    })
                    .collect()
            })
            .collect();
        finish_from_p_coeffs(t, p_coeffs)
    } else {
        interpolated_table(t)
    }
}

fn finish_from_p_coeffs(t: Arc<DegreeTables>, p_coeffs: Vec<Vec<AlphaPoly>>) -> JackTable {
    let count = t.parts.len();
    let mut m_coeffs = vec![vec![AlphaPoly::zero(); count]; count];
    for i in 0..count {
        for (k, c) in p_coeffs[i].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, b) in &t.p_to_m[k] {
                let add = c.scale(&Rational::from_integer(b.clone()));
                m_coeffs[i][*j] = &m_coeffs[i][*j] + &add;
            }
        }
    }
    let norms = (0..count).map(|i| norm_of_row(&t, &p_coeffs[i])).collect();
    JackTable {
        tables: t,
        m_coeffs,
        p_coeffs,
        norms,
    }
}

fn finish_from_m_coeffs(t: Arc<DegreeTables>, m_coeffs: Vec<Vec<AlphaPoly>>) -> JackTable {
    let count = t.parts.len();
    let mut p_coeffs = vec![vec![AlphaPoly::zero(); count]; count];
    for i in 0..count {
        for (j, c) in m_coeffs[i].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (k, b) in &t.m_to_p[j] {
                let add = c.scale(b);
                p_coeffs[i][*k] = &p_coeffs[i][*k] + &add;
            }
        }
    }
    let norms = (0..count).map(|i| norm_of_row(&t, &p_coeffs[i])).collect();
    JackTable {
        tables: t,
        m_coeffs,
        p_coeffs,
        norms,
    }
}

/// `<f, f>` for a power-sum coefficient row: `sum f_k^2 z_k alpha^{l(k)}`.
fn norm_of_row(t: &DegreeTables, row: &[AlphaPoly]) -> AlphaPoly {
    let mut acc = AlphaPoly::zero();
    for (k, c) in row.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let w = AlphaPoly::monomial(Rational::from_integer(t.z[k].clone()), t.lens[k]);
        acc = &acc + &(&(c * c) * &w);
    }
    acc
}

/// Gram-Schmidt over `Q(alpha)` in the power-sum basis, processing
/// partitions in the given linear extension of dominance order.
/// Returns rows indexed by partition (not by processing position).
pub(crate) fn gram_schmidt_symbolic(t: &DegreeTables, order: &[usize]) -> Vec<Vec<AlphaRat>> {
    let count = t.parts.len();
    let weights: Vec<AlphaPoly> = (0..count)
        .map(|k| AlphaPoly::monomial(Rational::from_integer(t.z[k].clone()), t.lens[k]))
        .collect();
    let nfact = Rational::from_integer(factorial(t.n));
    let mut rows: Vec<Vec<AlphaRat>> = vec![Vec::new(); count];
    let mut norms: Vec<AlphaRat> = vec![AlphaRat::zero(); count];
    let mut done: Vec<usize> = Vec::with_capacity(count);
    for &i in order {
        let mut v = vec![AlphaRat::zero(); count];
        for (k, c) in &t.m_to_p[i] {
            v[*k] = AlphaRat::from_rational(c.clone());
        }
        for &j in &done {
            // Dominance triangularity: <m_i, J_j> vanishes unless j <= i.
            if !t.dominance[i][j] {
                continue;
            }
            let mut overlap = AlphaRat::zero();
            for k in 0..count {
                if v[k].is_zero() || rows[j][k].is_zero() {
                    continue;
                }
                let w = AlphaRat::from_poly(weights[k].clone());
                overlap = &overlap + &(&(&v[k] * &rows[j][k]) * &w);
            }
            if overlap.is_zero() {
                continue;
            }
            let coef = &overlap / &norms[j];
            for k in 0..count {
                if rows[j][k].is_zero() {
                    continue;
                }
                v[k] = &v[k] - &(&coef * &rows[j][k]);
            }
        }
        // Rescale so the coefficient of m_{1^n} equals n!.
        let mut ones_coeff = AlphaRat::zero();
        for (k, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, b) in &t.p_to_m[k] {
                if *j == t.ones_index() {
                    let add = c * &AlphaRat::from_rational(Rational::from_integer(b.clone()));
                    ones_coeff = &ones_coeff + &add;
                }
            }
        }
        let scale = &AlphaRat::from_rational(nfact.clone()) / &ones_coeff;
        for c in v.iter_mut() {
            if !c.is_zero() {
                *c = &*c * &scale;
            }
        }
        let mut norm = AlphaRat::zero();
        for (k, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let w = AlphaRat::from_poly(weights[k].clone());
            norm = &norm + &(&(c * c) * &w);
        }
        norms[i] = norm;
        rows[i] = v;
        done.push(i);
    }
    rows
}

/// One sample of the orthogonalization with `alpha` specialized to a
/// rational value `a > 0` (all intermediate norms are then nonzero).
pub(crate) struct NumericJackTable {
    pub tables: Arc<DegreeTables>,
    pub alpha: Rational,
    pub p_rows: Vec<Vec<Rational>>,
    pub m_rows: Vec<Vec<Rational>>,
    pub norms: Vec<Rational>,
}

pub(crate) fn gram_schmidt_numeric(
    t: &Arc<DegreeTables>,
    a: &Rational,
    order: &[usize],
) -> NumericJackTable {
    let count = t.parts.len();
    let weights: Vec<Rational> = (0..count)
        .map(|k| {
            let mut w = Rational::from_integer(t.z[k].clone());
            for _ in 0..t.lens[k] {
                w *= a;
            }
            w
        })
        .collect();
    let nfact = Rational::from_integer(factorial(t.n));
    let mut rows: Vec<Vec<Rational>> = vec![Vec::new(); count];
    let mut norms: Vec<Rational> = vec![Rational::zero(); count];
    let mut done: Vec<usize> = Vec::with_capacity(count);
    for &i in order {
        let mut v = vec![Rational::zero(); count];
        for (k, c) in &t.m_to_p[i] {
            v[*k] = c.clone();
        }
        for &j in &done {
            if !t.dominance[i][j] {
                continue;
            }
            let mut overlap = Rational::zero();
            for k in 0..count {
                if v[k].is_zero() || rows[j][k].is_zero() {
                    continue;
                }
                overlap += &v[k] * &rows[j][k] * &weights[k];
            }
            if overlap.is_zero() {
                continue;
            }
            let coef = overlap / &norms[j];
            for k in 0..count {
                if !rows[j][k].is_zero() {
                    v[k] -= &coef * &rows[j][k];
                }
            }
        }
        let mut ones_coeff = Rational::zero();
        for (k, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, b) in &t.p_to_m[k] {
                if *j == t.ones_index() {
                    ones_coeff += c * Rational::from_integer(b.clone());
                }
            }
        }
        let scale = &nfact / &ones_coeff;
        for c in v.iter_mut() {
            if !c.is_zero() {
                *c *= &scale;
            }
        }
        let mut norm = Rational::zero();
        for (k, c) in v.iter().enumerate() {
            if !c.is_zero() {
                norm += c * c * &weights[k];
            }
        }
        norms[i] = norm;
        rows[i] = v;
        done.push(i);
    }
    let m_rows = (0..count)
        .map(|i| {
            let mut m = vec![Rational::zero(); count];
            for (k, c) in rows[i].iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (j, b) in &t.p_to_m[k] {
                    m[*j] += c * Rational::from_integer(b.clone());
                }
            }
            m
        })
        .collect();
    NumericJackTable {
        tables: t.clone(),
        alpha: a.clone(),
        p_rows: rows,
        m_rows,
        norms,
    }
}

/// The `alpha = 1` specialization, memoized (used for Schur-level checks).
pub(crate) fn numeric_table_at_one(n: usize) -> Arc<NumericJackTable> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<NumericJackTable>>>> = OnceLock::new();
    static BUILD: Mutex<()> = Mutex::new(());
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&n) {
        return t.clone();
    }
    let _guard = BUILD.lock().unwrap();
    if let Some(t) = cache.lock().unwrap().get(&n) {
        return t.clone();
    }
    let t = degree_tables(n);
    let order: Vec<usize> = (0..t.parts.len()).collect();
    let built = Arc::new(gram_schmidt_numeric(&t, &rat(1), &order));
    cache.lock().unwrap().insert(n, built.clone());
    built
}

/// Runs the orthogonalization at integer sample points and recovers the
/// monomial coefficients of every `J_lambda` by exact Newton
/// interpolation; the result is verified against two further sample
/// points before being accepted.
fn interpolated_table(t: Arc<DegreeTables>) -> JackTable {
    let count = t.parts.len();
    let order: Vec<usize> = (0..count).collect();
    let mut points = t.n + 2;
    loop {
        let samples = sample_tables(&t, &order, 1, points);
        let mut m_coeffs = vec![vec![AlphaPoly::zero(); count]; count];
        let xs: Vec<Rational> = (1..=points).map(|k| rat(k as i64)).collect();
        for i in 0..count {
            for j in 0..count {
                let values: Vec<Rational> =
                    samples.iter().map(|s| s.m_rows[i][j].clone()).collect();
                m_coeffs[i][j] = newton_interpolate(&xs, &values);
            }
        }
        let checks = sample_tables(&t, &order, points + 1, 2);
        let ok = checks.iter().all(|chk| {
            (0..count).all(|i| {
                (0..count).all(|j| m_coeffs[i][j].eval(&chk.alpha) == chk.m_rows[i][j])
            })
        });
        if ok {
            return finish_from_m_coeffs(t, m_coeffs);
        }
        points += t.n / 2 + 2;
    }
}

/// Numeric tables at `alpha = start .. start+len`, computed in parallel.
fn sample_tables(
    t: &Arc<DegreeTables>,
    order: &[usize],
    start: usize,
    len: usize,
) -> Vec<NumericJackTable> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = (start..start + len)
            .map(|k| {
                let t = t.clone();
                let order = order.to_vec();
                scope.spawn(move || gram_schmidt_numeric(&t, &rat(k as i64), &order))
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    })
}

/// Exact polynomial through the points `(xs[i], values[i])` by Newton's
/// divided differences.
fn newton_interpolate(xs: &[Rational], values: &[Rational]) -> AlphaPoly {
    let n = xs.len();
    let mut dd: Vec<Rational> = values.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = &xs[i] - &xs[i - level];
            dd[i] = num / den;
        }
    }
    let mut poly = AlphaPoly::zero();
    for i in (0..n).rev() {
        let lin = AlphaPoly::from_coeffs(vec![-xs[i].clone(), Rational::one()]);
        poly = &(&poly * &lin) + &AlphaPoly::constant(dd[i].clone());
    }
    poly
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn newton_interpolation_reconstructs() {
        // 2 alpha^2 - 3 alpha + 1/2 through four points.
        let poly = AlphaPoly::from_coeffs(vec![crate::alpha::ratio(1, 2), rat(-3), rat(2)]);
        let xs: Vec<Rational> = (1..=4).map(rat).collect();
        let values: Vec<Rational> = xs.iter().map(|x| poly.eval(x)).collect();
        assert_eq!(newton_interpolate(&xs, &values), poly);
    }

    #[test]
    fn gram_schmidt_is_extension_independent() {
        for n in 1..=6 {
            let t = degree_tables(n);
            let count = t.parts.len();
            let default: Vec<usize> = (0..count).collect();
            // Second linear extension of dominance: length descending,
            // lexicographic ascending within a length.
            let mut alt = default.clone();
            alt.sort_by(|&a, &b| {
                t.parts[b]
                    .len()
                    .cmp(&t.parts[a].len())
                    .then_with(|| t.parts[a].parts().cmp(t.parts[b].parts()))
            });
            let r1 = gram_schmidt_symbolic(&t, &default);
            let r2 = gram_schmidt_symbolic(&t, &alt);
            assert_eq!(r1, r2, "degree {n}");
        }
    }

    #[test]
    fn interpolated_matches_symbolic() {
        for n in [5usize, 6] {
            let t = degree_tables(n);
            let symbolic = build_jack_table(n);
            let interp = interpolated_table(t);
            assert_eq!(symbolic.m_coeffs, interp.m_coeffs, "degree {n}");
            assert_eq!(symbolic.norms, interp.norms, "degree {n}");
        }
    }

    #[test]
    fn numeric_at_one_matches_symbolic_at_one() {
        for n in 1..=6 {
            let table = jack_table(n);
            let numeric = numeric_table_at_one(n);
            for i in 0..table.tables.parts.len() {
                for j in 0..table.tables.parts.len() {
                    assert_eq!(
                        table.m_coeffs[i][j].eval(&rat(1)),
                        numeric.m_rows[i][j],
                        "degree {n}"
                    );
                }
            }
        }
    }

    #[test]
    fn degree_two_and_three_jacks() {
        let t2 = jack_table(2);
        // J_2 = (1+alpha) m_2 + 2 m_11, J_11 = 2 m_11.
        let i2 = t2.tables.index[&p(&[2])];
        let i11 = t2.tables.index[&p(&[1, 1])];
        assert_eq!(
            t2.m_coeffs[i2][i2],
            AlphaPoly::from_coeffs(vec![rat(1), rat(1)])
        );
        assert_eq!(t2.m_coeffs[i2][i11], AlphaPoly::constant(rat(2)));
        assert_eq!(t2.m_coeffs[i11][i11], AlphaPoly::constant(rat(2)));
        assert!(t2.m_coeffs[i11][i2].is_zero());
    }

    #[test]
    fn install_rejects_malformed_tables() {
        let t = degree_tables(2);
        let count = t.parts.len();
        let bad = vec![vec![AlphaPoly::zero(); count]; count];
        assert!(install_jack_table(2, bad).is_err());
    }
}
