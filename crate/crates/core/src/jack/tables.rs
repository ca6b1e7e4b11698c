//! Per-degree basis-conversion data: the power-sum/monomial transition
//! matrices, `z` weights, and the ascending partition order used by the
//! orthogonalization engine.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::alpha::Rational;
use crate::partition::{partitions_of, Partition};

pub(crate) struct DegreeTables {
    pub n: usize,
    /// Partitions of `n` in ascending lexicographic order (`1^n` first).
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// Row `k`: integer expansion of `p_{parts[k]}` in the monomial basis.
    pub p_to_m: Vec<Vec<(usize, BigInt)>>,
    /// Row `i`: rational expansion of `m_{parts[i]}` in the power-sum basis.
    pub m_to_p: Vec<Vec<(usize, Rational)>>,
    /// `z_k = prod v^{m_v} m_v!` for each partition.
    pub z: Vec<BigInt>,
    /// Number of parts of each partition.
    pub lens: Vec<usize>,
    /// `dominance[i][j]`: whether `parts[j]` is dominated by `parts[i]`.
    pub dominance: Vec<Vec<bool>>,
}

impl DegreeTables {
    pub fn build(n: usize) -> DegreeTables {
        let parts = partitions_of(n);
        let count = parts.len();
        let index: HashMap<Partition, usize> = parts
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();

        let mut p_to_m = Vec::with_capacity(count);
        for p in &parts {
            let exp = power_expansion(p);
            let mut row: Vec<(usize, BigInt)> = exp
                .into_iter()
                .map(|(mu, c)| (index[&mu], c))
                .collect();
            row.sort_by_key(|&(j, _)| j);
            p_to_m.push(row);
        }

        let m_to_p = invert_upper_triangular(&p_to_m, count);

        let z = parts.iter().map(z_value).collect();
        let lens = parts.iter().map(|p| p.len()).collect();
        let dominance = parts
            .iter()
            .map(|a| parts.iter().map(|b| b.dominated_by(a)).collect())
            .collect();

        DegreeTables {
            n,
            parts,
            index,
            p_to_m,
            m_to_p,
            z,
            lens,
            dominance,
        }
    }

    /// Index of `1^n`, the minimum of dominance order.
    pub fn ones_index(&self) -> usize {
        0
    }
}

/// `z_mu`: `n!/z_mu` counts permutations of cycle type `mu`.
pub(crate) fn z_value(p: &Partition) -> BigInt {
    let mut z = BigInt::one();
    let mut run = 0usize;
    let parts = p.parts();
    for i in 0..parts.len() {
        run += 1;
        z *= BigInt::from(parts[i]);
        if i + 1 == parts.len() || parts[i + 1] != parts[i] {
            for f in 2..=run {
                z *= BigInt::from(f);
            }
            run = 0;
        }
    }
    z
}

/// Expansion of `p_lambda` in the monomial basis, with integer coefficients.
///
/// Built by repeated multiplication with single power sums: adding `p_r`
/// to `m_mu` either starts a new part `r` or grows one existing part `v`
/// to `v + r`, with coefficient the multiplicity of `v + r` in the result.
pub(crate) fn power_expansion(lambda: &Partition) -> BTreeMap<Partition, BigInt> {
    let mut exp: BTreeMap<Partition, BigInt> = BTreeMap::new();
    exp.insert(Partition::empty(), BigInt::one());
    for &r in lambda.parts() {
        let mut next: BTreeMap<Partition, BigInt> = BTreeMap::new();
        for (mu, c) in &exp {
            let mut values: Vec<usize> = vec![0];
            for &v in mu.parts() {
                if values.last() != Some(&v) {
                    values.push(v);
                }
            }
            for v in values {
                let mut parts: Vec<usize> = mu.parts().to_vec();
                if v > 0 {
                    let pos = parts.iter().position(|&p| p == v).unwrap();
                    parts.remove(pos);
                }
                parts.push(v + r);
                parts.sort_unstable_by(|a, b| b.cmp(a));
                let nu = Partition::new(parts);
                let mult = nu.parts().iter().filter(|&&p| p == v + r).count();
                *next.entry(nu).or_insert_with(BigInt::zero) += c * BigInt::from(mult);
            }
        }
        exp = next;
    }
    exp
}

/// Inverts the upper-triangular power-to-monomial matrix, giving each
/// `m_mu` in the power-sum basis.
fn invert_upper_triangular(
    rows: &[Vec<(usize, BigInt)>],
    count: usize,
) -> Vec<Vec<(usize, Rational)>> {
    // Dense inverse; partition counts at desk scale stay small.
    let mut m = vec![vec![Rational::zero(); count]; count];
    for (i, row) in rows.iter().enumerate() {
        for (j, c) in row {
            m[i][*j] = Rational::from_integer(c.clone());
        }
    }
    let mut inv = vec![vec![Rational::zero(); count]; count];
    for i in (0..count).rev() {
        let diag = m[i][i].clone();
        inv[i][i] = Rational::one() / &diag;
        for k in (i + 1)..count {
            let mut acc = Rational::zero();
            for j in (i + 1)..=k {
                if !m[i][j].is_zero() && !inv[j][k].is_zero() {
                    acc += &m[i][j] * &inv[j][k];
                }
            }
            if !acc.is_zero() {
                inv[i][k] = -acc / &diag;
            }
        }
    }
    (0..count)
        .map(|i| {
            (0..count)
                .filter(|&k| !inv[i][k].is_zero())
                .map(|k| (k, inv[i][k].clone()))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alpha::rat;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn z_values() {
        assert_eq!(z_value(&p(&[3])), BigInt::from(3));
        assert_eq!(z_value(&p(&[1, 1])), BigInt::from(2));
        assert_eq!(z_value(&p(&[2, 1])), BigInt::from(2));
        assert_eq!(z_value(&p(&[2, 2, 1, 1])), BigInt::from(16));
        assert_eq!(z_value(&Partition::empty()), BigInt::one());
    }

    #[test]
    fn power_expansions() {
        let e = power_expansion(&p(&[1]));
        assert_eq!(e.len(), 1);
        assert_eq!(e[&p(&[1])], BigInt::one());

        let e = power_expansion(&p(&[2]));
        assert_eq!(e.len(), 1);
        assert_eq!(e[&p(&[2])], BigInt::one());

        let e = power_expansion(&p(&[1, 1]));
        assert_eq!(e[&p(&[2])], BigInt::one());
        assert_eq!(e[&p(&[1, 1])], BigInt::from(2));

        let e = power_expansion(&p(&[3]));
        assert_eq!(e.len(), 1);
        assert_eq!(e[&p(&[3])], BigInt::one());

        let e = power_expansion(&p(&[1, 1, 1]));
        assert_eq!(e[&p(&[3])], BigInt::one());
        assert_eq!(e[&p(&[2, 1])], BigInt::from(3));
        assert_eq!(e[&p(&[1, 1, 1])], BigInt::from(6));
    }

    #[test]
    fn monomial_to_power_inverts() {
        for n in 0..=7 {
            let t = DegreeTables::build(n);
            let count = t.parts.len();
            // m_to_p composed with p_to_m is the identity.
            for i in 0..count {
                let mut dense = vec![Rational::zero(); count];
                for (k, c) in &t.m_to_p[i] {
                    for (j, b) in &t.p_to_m[*k] {
                        dense[*j] += c * Rational::from_integer(b.clone());
                    }
                }
                for (j, v) in dense.iter().enumerate() {
                    let want = if j == i { rat(1) } else { rat(0) };
                    assert_eq!(*v, want, "degree {n}, row {i}, col {j}");
                }
            }
        }
    }

    #[test]
    fn m111_in_power_sums() {
        let t = DegreeTables::build(3);
        let i = t.index[&p(&[1, 1, 1])];
        let row: BTreeMap<usize, Rational> = t.m_to_p[i].iter().cloned().collect();
        // (p_111 - 3 p_21 + 2 p_3)/6
        assert_eq!(row[&t.index[&p(&[1, 1, 1])]], ratq(1, 6));
        assert_eq!(row[&t.index[&p(&[2, 1])]], ratq(-1, 2));
        assert_eq!(row[&t.index[&p(&[3])]], ratq(1, 3));
    }

    fn ratq(n: i64, d: i64) -> Rational {
        crate::alpha::ratio(n, d)
    }
}
