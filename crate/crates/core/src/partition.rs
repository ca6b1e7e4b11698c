//! Young diagrams and their box combinatorics.
//!
//! Coordinates follow the French convention: `x` is horizontal, `y`
//! vertical, the bottom-left box of a diagram is `(0,0)`, and row `y` of
//! the partition `lambda` has length `lambda[y]` (0-indexed from the
//! bottom). General lattice points may have negative coordinates.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::alpha::{bracket, AlphaPoly};
use crate::error::{Error, Result};

/// A lattice point; boxes of a diagram have non-negative coordinates.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoxCoord {
    pub x: i64,
    pub y: i64,
}

impl BoxCoord {
    pub const fn new(x: i64, y: i64) -> Self {
        BoxCoord { x, y }
    }

    /// The shifted box `s+ = s + (1,1)`.
    pub fn up(self) -> Self {
        BoxCoord::new(self.x + 1, self.y + 1)
    }

    /// The shifted box `s- = s - (1,1)`.
    pub fn down(self) -> Self {
        BoxCoord::new(self.x - 1, self.y - 1)
    }

    pub fn add(self, other: BoxCoord) -> Self {
        BoxCoord::new(self.x + other.x, self.y + other.y)
    }

    pub fn sub(self, other: BoxCoord) -> Self {
        BoxCoord::new(self.x - other.x, self.y - other.y)
    }
}

impl fmt::Display for BoxCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

impl fmt::Debug for BoxCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Componentwise minimum of two lattice points (the box where the row of
/// one meets the column of the other, inside any diagram containing both).
pub fn join(a: BoxCoord, b: BoxCoord) -> BoxCoord {
    BoxCoord::new(a.x.min(b.x), a.y.min(b.y))
}

/// Componentwise maximum of two lattice points.
pub fn meet(a: BoxCoord, b: BoxCoord) -> BoxCoord {
    BoxCoord::new(a.x.max(b.x), a.y.max(b.y))
}

/// Displacement attached to a box of a diagram; its bracket is the
/// corresponding hook value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct HookVector {
    pub dx: i64,
    pub dy: i64,
}

impl HookVector {
    pub fn new(dx: i64, dy: i64) -> Self {
        HookVector { dx, dy }
    }

    pub fn as_box(self) -> BoxCoord {
        BoxCoord::new(self.dx, self.dy)
    }

    /// The hook value `[dx, dy] = alpha*dx - dy`.
    pub fn value(self) -> AlphaPoly {
        bracket(self.as_box())
    }

    pub fn neg(self) -> Self {
        HookVector::new(-self.dx, -self.dy)
    }
}

/// An integer partition, stored as weakly decreasing positive parts.
///
/// Partitions are immutable values; equality is sequence equality after
/// trailing-zero normalization.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.
    ///
    /// Panics when the parts are not weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing"
        );
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The rectangular partition with `n` rows of length `m`.
    pub fn rectangle(m: usize, n: usize) -> Self {
        if m == 0 {
            return Partition::empty();
        }
        Partition { parts: vec![m; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Row length at 0-indexed row `y` (zero beyond the last row).
    pub fn row_len(&self, y: usize) -> usize {
        self.parts.get(y).copied().unwrap_or(0)
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Height of column `x` (number of rows of length `> x`).
    pub fn col_height(&self, x: usize) -> usize {
        self.parts.iter().take_while(|&&p| p > x).count()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.row_len(0);
        Partition::new((0..cols).map(|x| self.col_height(x)).collect())
    }

    /// True when `b` is a box of this diagram.
    pub fn contains_box(&self, b: BoxCoord) -> bool {
        b.x >= 0 && b.y >= 0 && (b.y as usize) < self.len() && (b.x as usize) < self.parts[b.y as usize]
    }

    /// True when the diagram of `other` fits inside this one.
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .parts
            .iter()
            .enumerate()
            .all(|(i, &p)| self.row_len(i) >= p)
    }

    /// Boxes in reading order: row by row from the bottom.
    pub fn boxes(&self) -> impl Iterator<Item = BoxCoord> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(y, &len)| (0..len).map(move |x| BoxCoord::new(x as i64, y as i64)))
    }

    /// Boxes excluding the origin.
    pub fn boxes_without_origin(&self) -> impl Iterator<Item = BoxCoord> + '_ {
        self.boxes().filter(|b| !(b.x == 0 && b.y == 0))
    }

    /// Boxes of this diagram in the same row as `s` (which need not be a box).
    pub fn row_boxes(&self, s: BoxCoord) -> Vec<BoxCoord> {
        if s.y < 0 || s.y as usize >= self.len() {
            return Vec::new();
        }
        (0..self.parts[s.y as usize])
            .map(|x| BoxCoord::new(x as i64, s.y))
            .collect()
    }

    /// Boxes of this diagram in the same column as `s`.
    pub fn col_boxes(&self, s: BoxCoord) -> Vec<BoxCoord> {
        if s.x < 0 {
            return Vec::new();
        }
        (0..self.col_height(s.x as usize))
            .map(|y| BoxCoord::new(s.x, y as i64))
            .collect()
    }

    /// Number of boxes strictly to the right of `s` in its row.
    pub fn arm(&self, s: BoxCoord) -> Result<i64> {
        self.check_box(s)?;
        Ok(self.parts[s.y as usize] as i64 - s.x - 1)
    }

    /// Number of boxes strictly above `s` in its column.
    pub fn leg(&self, s: BoxCoord) -> Result<i64> {
        self.check_box(s)?;
        Ok(self.col_height(s.x as usize) as i64 - s.y - 1)
    }

    fn check_box(&self, s: BoxCoord) -> Result<()> {
        if self.contains_box(s) {
            Ok(())
        } else {
            Err(Error::BoxNotInDiagram {
                x: s.x,
                y: s.y,
                shape: self.to_string(),
            })
        }
    }

    /// Upper hook vector `(arm+1, -leg)`; its bracket is `alpha*(arm+1) + leg`.
    pub fn upper_hook(&self, s: BoxCoord) -> Result<HookVector> {
        Ok(HookVector::new(self.arm(s)? + 1, -self.leg(s)?))
    }

    /// Lower hook vector `(arm, -leg-1)`; its bracket is `alpha*arm + leg + 1`.
    pub fn lower_hook(&self, s: BoxCoord) -> Result<HookVector> {
        Ok(HookVector::new(self.arm(s)?, -self.leg(s)? - 1))
    }

    /// Boxes that can be added while keeping a Young diagram.
    pub fn outer_corners(&self) -> Vec<BoxCoord> {
        let mut out = Vec::new();
        for y in 0..=self.len() {
            let here = self.row_len(y);
            if y == 0 || self.row_len(y - 1) > here {
                out.push(BoxCoord::new(here as i64, y as i64));
            }
        }
        out
    }

    /// Boxes that can be removed while keeping a Young diagram.
    pub fn inner_corners(&self) -> Vec<BoxCoord> {
        let mut out = Vec::new();
        for y in 0..self.len() {
            let here = self.parts[y];
            if here > self.row_len(y + 1) {
                out.push(BoxCoord::new(here as i64 - 1, y as i64));
            }
        }
        out
    }

    /// Inner corners shifted by `(1,1)`.
    pub fn inner_corners_shifted(&self) -> Vec<BoxCoord> {
        self.inner_corners().into_iter().map(BoxCoord::up).collect()
    }

    /// The partition with box `s` added; `s` must be an outer corner.
    pub fn with_box(&self, s: BoxCoord) -> Result<Partition> {
        if !self.outer_corners().contains(&s) {
            return Err(Error::NotAnOuterCorner {
                x: s.x,
                y: s.y,
                shape: self.to_string(),
            });
        }
        let mut parts = self.parts.clone();
        if (s.y as usize) < parts.len() {
            parts[s.y as usize] += 1;
        } else {
            parts.push(1);
        }
        Ok(Partition::new(parts))
    }

    /// The partition with box `s` removed; `s` must be an inner corner.
    pub fn without_box(&self, s: BoxCoord) -> Result<Partition> {
        if !self.inner_corners().contains(&s) {
            return Err(Error::NotAnInnerCorner {
                x: s.x,
                y: s.y,
                shape: self.to_string(),
            });
        }
        let mut parts = self.parts.clone();
        parts[s.y as usize] -= 1;
        Ok(Partition::new(parts))
    }

    /// Union of diagrams: rowwise maximum of lengths.
    pub fn union(&self, other: &Partition) -> Partition {
        let rows = self.len().max(other.len());
        Partition::new(
            (0..rows)
                .map(|y| self.row_len(y).max(other.row_len(y)))
                .collect(),
        )
    }

    /// Intersection of diagrams: rowwise minimum of lengths.
    pub fn intersect(&self, other: &Partition) -> Partition {
        let rows = self.len().min(other.len());
        Partition::new(
            (0..rows)
                .map(|y| self.row_len(y).min(other.row_len(y)))
                .collect(),
        )
    }

    /// Complement `(m - mu_n, ..., m - mu_1)` inside the `m x n` rectangle.
    pub fn complement(&self, m: usize, n: usize) -> Result<Partition> {
        if self.len() > n || self.row_len(0) > m {
            return Err(Error::NotContained {
                mu: self.to_string(),
                m,
                n,
            });
        }
        Ok(Partition::new(
            (0..n).rev().map(|i| m - self.row_len(i)).collect(),
        ))
    }

    /// True when `self <= other` in dominance order (same size assumed).
    pub fn dominated_by(&self, other: &Partition) -> bool {
        let mut a = 0usize;
        let mut b = 0usize;
        for i in 0..self.len().max(other.len()) {
            a += self.row_len(i);
            b += other.row_len(i);
            if a > b {
                return false;
            }
        }
        a == b
    }

    /// True when `self / inner` is a horizontal strip: `inner` fits inside
    /// and no column gains more than one box.
    pub fn horizontal_strip_over(&self, inner: &Partition) -> bool {
        if !self.contains(inner) {
            return false;
        }
        (0..self.len()).all(|i| i == 0 || inner.row_len(i - 1) >= self.row_len(i))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses comma-separated decimal parts, optionally bracketed:
    /// `4,2,2,1,1` or `[4,2,2,1,1]`. A bare multi-digit token without
    /// commas or brackets (like `42211`) is rejected as ambiguous; a
    /// single part of ten or more must be written `[12]` or `12,`.
    fn from_str(s: &str) -> Result<Self> {
        let raw = s.trim();
        let bracketed = raw.starts_with('[') && raw.ends_with(']');
        let inner = if bracketed {
            &raw[1..raw.len() - 1]
        } else {
            raw
        };
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let err = |reason: &str| Error::ParsePartition {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        if !bracketed && !inner.contains(',') && inner.len() > 1 {
            return Err(err(
                "ambiguous digit string; separate parts with commas (or bracket a single part)",
            ));
        }
        let mut parts = Vec::new();
        for tok in inner.split(',') {
            let tok = tok.trim();
            if tok.is_empty() {
                continue;
            }
            let p: usize = tok
                .parse()
                .map_err(|_| err("parts must be decimal integers"))?;
            parts.push(p);
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(err("parts must be weakly decreasing"));
        }
        Ok(Partition::new(parts))
    }
}

/// Multiset of lattice boxes with positive multiplicities.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BoxMultiset {
    counts: BTreeMap<BoxCoord, usize>,
}

impl BoxMultiset {
    pub fn new() -> Self {
        BoxMultiset::default()
    }

    pub fn insert(&mut self, b: BoxCoord, mult: usize) {
        if mult > 0 {
            *self.counts.entry(b).or_insert(0) += mult;
        }
    }

    pub fn multiplicity(&self, b: BoxCoord) -> usize {
        self.counts.get(&b).copied().unwrap_or(0)
    }

    /// Total count with multiplicity.
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (BoxCoord, usize)> + '_ {
        self.counts.iter().map(|(&b, &m)| (b, m))
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }
}

impl FromIterator<BoxCoord> for BoxMultiset {
    fn from_iter<T: IntoIterator<Item = BoxCoord>>(iter: T) -> Self {
        let mut ms = BoxMultiset::new();
        for b in iter {
            ms.insert(b, 1);
        }
        ms
    }
}

/// The star product: the multiset `{s + t : s in lambda, t in mu}`.
pub fn star_product(lambda: &Partition, mu: &Partition) -> BoxMultiset {
    let mut ms = BoxMultiset::new();
    for s in lambda.boxes() {
        for t in mu.boxes() {
            ms.insert(s.add(t), 1);
        }
    }
    ms
}

/// Horizontal reflection inside a fixed `m x n` rectangle.
pub fn hflip(b: BoxCoord, m: usize, _n: usize) -> BoxCoord {
    BoxCoord::new(m as i64 - 1 - b.x, b.y)
}

/// Vertical reflection inside a fixed `m x n` rectangle.
pub fn vflip(b: BoxCoord, _m: usize, n: usize) -> BoxCoord {
    BoxCoord::new(b.x, n as i64 - 1 - b.y)
}

/// The complementary box `(m-1, n-1) - b` inside a fixed rectangle.
pub fn bar(b: BoxCoord, m: usize, n: usize) -> BoxCoord {
    BoxCoord::new(m as i64 - 1 - b.x, n as i64 - 1 - b.y)
}

/// Decomposition of an arbitrary partition against a fixed rectangle.
///
/// `sigma` is the intersection with the rectangle and `sigma_bar` its
/// complement inside it. `mu1` holds the boxes above the rectangle
/// (`y >= n`), `mu3` the boxes to its right (`x >= m`, `y < n`). `r` and
/// `c` count the full rows/columns they protrude from, `K` is the
/// remaining `k x l` sub-rectangle at `[c,m) x [r,n)`, `mu2` the part of
/// `sigma` inside `K` in `K`-local coordinates, and `mu0` the rest of
/// `sigma`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RectDecomposition {
    pub sigma: Partition,
    pub sigma_bar: Partition,
    pub mu0: Vec<BoxCoord>,
    pub mu1: Vec<BoxCoord>,
    pub mu2: Partition,
    pub mu3: Vec<BoxCoord>,
    /// Columns `x < c` of the rectangle are fully contained in `mu`.
    pub c: usize,
    /// Rows `y < r` of the rectangle are fully contained in `mu`.
    pub r: usize,
    /// Width of the sub-rectangle `K`.
    pub k: usize,
    /// Height of the sub-rectangle `K`.
    pub l: usize,
}

impl RectDecomposition {
    /// Bottom-left corner of `K` in global coordinates.
    pub fn k_origin(&self) -> BoxCoord {
        BoxCoord::new(self.c as i64, self.r as i64)
    }
}

/// Splits `mu` against the rectangle `m^n`.
///
/// Errors when some box of `mu` lies at `x >= m, y >= n` (no generic
/// decomposition exists for such shapes).
pub fn decompose_wrt_rectangle(mu: &Partition, m: usize, n: usize) -> Result<RectDecomposition> {
    if mu.len() > n && mu.row_len(n) > m {
        return Err(Error::GenericShapeViolation {
            mu: mu.to_string(),
            m,
            n,
            x: m as i64,
            y: n as i64,
        });
    }
    let rect = Partition::rectangle(m, n);
    let sigma = mu.intersect(&rect);
    let sigma_bar = sigma.complement(m, n)?;
    let r = (0..n).filter(|&y| mu.row_len(y) > m).count();
    let c = (0..m).filter(|&x| mu.col_height(x) > n).count();
    let k = m - c;
    let l = n - r;
    let mut mu1 = Vec::new();
    let mut mu3 = Vec::new();
    for b in mu.boxes() {
        if b.y >= n as i64 {
            mu1.push(b);
        } else if b.x >= m as i64 {
            mu3.push(b);
        }
    }
    let mut mu2_parts = Vec::new();
    for y in r..n {
        let len = sigma.row_len(y).saturating_sub(c);
        mu2_parts.push(len);
    }
    let mu2 = Partition::new(mu2_parts);
    let mut mu0 = Vec::new();
    for b in sigma.boxes() {
        if b.x < c as i64 || b.y < r as i64 {
            mu0.push(b);
        }
    }
    Ok(RectDecomposition {
        sigma,
        sigma_bar,
        mu0,
        mu1,
        mu2,
        mu3,
        c,
        r,
        k,
        l,
    })
}

/// All partitions of `n`, in ascending lexicographic order (a linear
/// extension of dominance order with `1^n` first and `(n)` last).
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    gen_partitions(n, n, &mut stack, &mut out);
    out.sort_by(|a, b| a.parts().cmp(b.parts()));
    out
}

fn gen_partitions(left: usize, max: usize, stack: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if left == 0 {
        out.push(Partition::new(stack.clone()));
        return;
    }
    for next in (1..=left.min(max)).rev() {
        stack.push(next);
        gen_partitions(left - next, next, stack, out);
        stack.pop();
    }
}

/// All partitions fitting inside the `m x n` rectangle (any size).
pub fn partitions_in_rectangle(m: usize, n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    gen_bounded(m, n, &mut stack, &mut out);
    out
}

fn gen_bounded(max: usize, rows: usize, stack: &mut Vec<usize>, out: &mut Vec<Partition>) {
    out.push(Partition::new(stack.clone()));
    if rows == 0 {
        return;
    }
    for next in (1..=max).rev() {
        stack.push(next);
        gen_bounded(next, rows - 1, stack, out);
        stack.pop();
    }
}

/// Comparator for the reverse-lexicographic display order used throughout
/// the crate: within a degree, `(n)` first and `1^n` last.
pub fn revlex_desc(a: &Partition, b: &Partition) -> std::cmp::Ordering {
    b.parts().cmp(a.parts())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alpha::rat;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn arm_and_leg() {
        let lam = p(&[7, 4, 2, 2, 1]);
        let s = BoxCoord::new(1, 0);
        assert_eq!(lam.arm(s).unwrap(), 5);
        assert_eq!(lam.leg(s).unwrap(), 3);

        let single = p(&[1]);
        assert_eq!(single.arm(BoxCoord::new(0, 0)).unwrap(), 0);
        assert_eq!(single.leg(BoxCoord::new(0, 0)).unwrap(), 0);

        let lam = p(&[3, 3, 1]);
        assert_eq!(lam.arm(BoxCoord::new(0, 0)).unwrap(), 2);
        assert_eq!(lam.leg(BoxCoord::new(0, 0)).unwrap(), 2);

        assert!(matches!(
            lam.arm(BoxCoord::new(3, 0)),
            Err(Error::BoxNotInDiagram { .. })
        ));
    }

    #[test]
    fn hook_values() {
        // A box with arm 2 and leg 4 has hooks 3*alpha + 4 and 2*alpha + 5.
        let lam = p(&[3, 1, 1, 1, 1]);
        let s = BoxCoord::new(0, 0);
        let uh = lam.upper_hook(s).unwrap().value();
        let lh = lam.lower_hook(s).unwrap().value();
        assert_eq!(uh, AlphaPoly::from_coeffs(vec![rat(4), rat(3)]));
        assert_eq!(lh, AlphaPoly::from_coeffs(vec![rat(5), rat(2)]));

        let single = p(&[1]);
        assert_eq!(
            single.upper_hook(s).unwrap().value(),
            AlphaPoly::from_coeffs(vec![rat(0), rat(1)])
        );
        assert_eq!(
            single.lower_hook(s).unwrap().value(),
            AlphaPoly::one()
        );

        // arm 5, leg 3 gives 6*alpha + 3 and 5*alpha + 4.
        let lam = p(&[7, 4, 2, 2, 1]);
        let s = BoxCoord::new(1, 0);
        assert_eq!(
            lam.upper_hook(s).unwrap().value(),
            AlphaPoly::from_coeffs(vec![rat(3), rat(6)])
        );
        assert_eq!(
            lam.lower_hook(s).unwrap().value(),
            AlphaPoly::from_coeffs(vec![rat(4), rat(5)])
        );
    }

    #[test]
    fn corners() {
        let lam = p(&[7, 4, 2, 2, 1]);
        let outer = lam.outer_corners();
        assert_eq!(outer.len(), 5);
        assert_eq!(lam.inner_corners().len(), 4);
        for &b in &[
            BoxCoord::new(7, 0),
            BoxCoord::new(4, 1),
            BoxCoord::new(2, 2),
            BoxCoord::new(1, 4),
            BoxCoord::new(0, 5),
        ] {
            assert!(outer.contains(&b));
        }

        assert_eq!(Partition::empty().outer_corners(), vec![BoxCoord::new(0, 0)]);
        assert!(Partition::empty().inner_corners().is_empty());

        let lam = p(&[3, 3, 1]);
        let mut shifted = lam.inner_corners_shifted();
        shifted.sort();
        assert_eq!(shifted, vec![BoxCoord::new(1, 3), BoxCoord::new(3, 2)]);
        let mut outer = lam.outer_corners();
        outer.sort();
        assert_eq!(
            outer,
            vec![BoxCoord::new(0, 3), BoxCoord::new(1, 2), BoxCoord::new(3, 0)]
        );
    }

    #[test]
    fn complements() {
        let mu = p(&[7, 5, 4, 2, 1]);
        assert_eq!(mu.complement(7, 6).unwrap(), p(&[7, 6, 5, 3, 2]));
        assert_eq!(
            Partition::rectangle(4, 3).complement(4, 3).unwrap(),
            Partition::empty()
        );
        assert_eq!(p(&[3, 2, 2, 1]).complement(3, 4).unwrap(), p(&[2, 1, 1]));
        assert!(p(&[4]).complement(3, 4).is_err());
    }

    #[test]
    fn star_products() {
        let a = p(&[3, 1]);
        let b = p(&[2, 2, 1]);
        let ms = star_product(&a, &b);
        assert_eq!(ms.total(), a.size() * b.size());
        assert_eq!(ms.multiplicity(BoxCoord::new(1, 1)), 3);
        assert_eq!(ms.multiplicity(BoxCoord::new(0, 0)), 1);

        let id = star_product(&a, &p(&[1]));
        for s in a.boxes() {
            assert_eq!(id.multiplicity(s), 1);
        }
        assert_eq!(id.total(), a.size());
    }

    #[test]
    fn join_meet() {
        let a = BoxCoord::new(5, 1);
        let b = BoxCoord::new(2, 4);
        assert_eq!(join(a, b), BoxCoord::new(2, 1));
        assert_eq!(meet(a, b), BoxCoord::new(5, 4));
        assert_eq!(join(a, a), a);
        assert_eq!(meet(a, a), a);
        assert_eq!(join(BoxCoord::new(0, 0), BoxCoord::new(3, 3)), BoxCoord::new(0, 0));
    }

    #[test]
    fn flips() {
        let b = BoxCoord::new(0, 0);
        assert_eq!(vflip(b, 3, 4), BoxCoord::new(0, 3));
        assert_eq!(hflip(b, 3, 4), BoxCoord::new(2, 0));
        assert_eq!(bar(b, 3, 4), BoxCoord::new(2, 3));
        for x in -3..6 {
            for y in -3..6 {
                let b = BoxCoord::new(x, y);
                assert_eq!(vflip(vflip(b, 3, 4), 3, 4), b);
                assert_eq!(hflip(bar(b, 3, 4), 3, 4), vflip(b, 3, 4));
            }
        }
    }

    #[test]
    fn rect_hook_identity() {
        // (m,0) - b equals the upper hook vector of the rectangle at vflip(b),
        // and b - (0,n) the lower hook vector at hflip(b).
        for m in 1..=5usize {
            for n in 1..=5usize {
                let rect = Partition::rectangle(m, n);
                for b in rect.boxes() {
                    let uh = rect.upper_hook(vflip(b, m, n)).unwrap();
                    assert_eq!(BoxCoord::new(m as i64, 0).sub(b), uh.as_box());
                    let lh = rect.lower_hook(hflip(b, m, n)).unwrap();
                    assert_eq!(b.sub(BoxCoord::new(0, n as i64)), lh.as_box());
                }
            }
        }
    }

    #[test]
    fn decompose_generic() {
        let mu = p(&[4, 2, 2, 1, 1]);
        let d = decompose_wrt_rectangle(&mu, 3, 4).unwrap();
        assert_eq!(d.sigma, p(&[3, 2, 2, 1]));
        assert_eq!(d.sigma_bar, p(&[2, 1, 1]));
        assert_eq!(d.r, 1);
        assert_eq!(d.c, 1);
        assert_eq!((d.k, d.l), (2, 3));
        assert_eq!(d.mu2, p(&[1, 1]));
        assert_eq!(d.mu1, vec![BoxCoord::new(0, 4)]);
        assert_eq!(d.mu3, vec![BoxCoord::new(3, 0)]);
        // mu2's complement inside K reproduces sigma_bar.
        assert_eq!(d.mu2.complement(d.k, d.l).unwrap(), d.sigma_bar);
        // The four pieces partition the boxes of mu.
        let mut all: Vec<BoxCoord> = d.mu0.clone();
        all.extend(&d.mu1);
        all.extend(&d.mu3);
        all.extend(d.mu2.boxes().map(|b| b.add(d.k_origin())));
        all.sort();
        let mut want: Vec<BoxCoord> = mu.boxes().collect();
        want.sort();
        assert_eq!(all, want);
    }

    #[test]
    fn decompose_trivial_cases() {
        let mu = p(&[2, 1]);
        let d = decompose_wrt_rectangle(&mu, 3, 3).unwrap();
        assert!(d.mu1.is_empty() && d.mu3.is_empty());
        assert_eq!((d.r, d.c), (0, 0));
        assert_eq!((d.k, d.l), (3, 3));
        assert_eq!(d.mu2, mu);

        let d = decompose_wrt_rectangle(&Partition::empty(), 2, 2).unwrap();
        assert!(d.sigma.is_empty());
        assert_eq!(d.sigma_bar, p(&[2, 2]));
        assert!(d.mu2.is_empty());

        // A box at (m, n) makes the shape non-generic.
        let bad = p(&[4, 4, 4, 4, 4]);
        assert!(matches!(
            decompose_wrt_rectangle(&bad, 3, 4),
            Err(Error::GenericShapeViolation { .. })
        ));
    }

    #[test]
    fn parsing() {
        assert_eq!("4,2,2,1,1".parse::<Partition>().unwrap(), p(&[4, 2, 2, 1, 1]));
        assert_eq!("[42]".parse::<Partition>().unwrap(), p(&[42]));
        assert_eq!("12,".parse::<Partition>().unwrap(), p(&[12]));
        assert_eq!("3".parse::<Partition>().unwrap(), p(&[3]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("42211".parse::<Partition>().is_err());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a,b".parse::<Partition>().is_err());
    }

    #[test]
    fn partition_generation() {
        assert_eq!(partitions_of(0).len(), 1);
        assert_eq!(partitions_of(5).len(), 7);
        assert_eq!(partitions_of(9).len(), 30);
        // Ascending lex: 1^n first, (n) last.
        let ps = partitions_of(4);
        assert_eq!(ps.first().unwrap(), &p(&[1, 1, 1, 1]));
        assert_eq!(ps.last().unwrap(), &p(&[4]));
        // Ascending lex extends dominance.
        for (i, a) in ps.iter().enumerate() {
            for b in &ps[i + 1..] {
                assert!(!b.dominated_by(a) || a == b);
            }
        }
        assert_eq!(partitions_in_rectangle(2, 2).len(), 6);
    }

    #[test]
    fn horizontal_strips() {
        assert!(p(&[3, 1]).horizontal_strip_over(&p(&[2])));
        assert!(p(&[2]).horizontal_strip_over(&p(&[1])));
        assert!(!p(&[2, 2]).horizontal_strip_over(&p(&[1])));
        assert!(p(&[2, 2]).horizontal_strip_over(&p(&[2, 1])));
        assert!(p(&[3]).horizontal_strip_over(&p(&[3])));
    }
}
