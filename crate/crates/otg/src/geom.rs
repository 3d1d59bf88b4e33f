//! Exact planar primitives: integer points, the orientation predicate,
//! canonical triple indexing, and full order types.

use crate::store::TripleStore;
use crate::{Error, Result};

/// A point with exact integer coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: i32,
    pub y: i32,
}

impl Point {
    pub fn new(x: i32, y: i32) -> Point {
        Point { x, y }
    }
}

/// Orientation of an ordered point triple. General position is assumed
/// throughout, so there is no collinear value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Ccw,
    Cw,
}

impl Orientation {
    /// The opposite orientation (swapping two arguments of a triple).
    pub fn flip(self) -> Orientation {
        match self {
            Orientation::Ccw => Orientation::Cw,
            Orientation::Cw => Orientation::Ccw,
        }
    }

    /// Applies a permutation sign: even permutations preserve orientation,
    /// odd ones flip it.
    pub fn with_sign(self, sign: i8) -> Orientation {
        if sign >= 0 {
            self
        } else {
            self.flip()
        }
    }
}

/// Signed orientation determinant of (p, q, r), exact for all i32 inputs.
fn det(p: Point, q: Point, r: Point) -> i128 {
    let ux = (q.x as i64 - p.x as i64) as i128;
    let uy = (q.y as i64 - p.y as i64) as i128;
    let vx = (r.x as i64 - p.x as i64) as i128;
    let vy = (r.y as i64 - p.y as i64) as i128;
    ux * vy - uy * vx
}

/// CCW/CW orientation of three points; errors on collinear or coincident
/// input.
pub fn orient(p: Point, q: Point, r: Point) -> Result<Orientation> {
    let d = det(p, q, r);
    if d > 0 {
        Ok(Orientation::Ccw)
    } else if d < 0 {
        Ok(Orientation::Cw)
    } else {
        Err(Error::CollinearOrDegenerate(format!(
            "({},{}) ({},{}) ({},{})",
            p.x, p.y, q.x, q.y, r.x, r.y
        )))
    }
}

/// A canonical (sorted) point triple together with its colexicographic rank
/// among all 3-subsets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TripleKey {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub rank: usize,
}

fn c2(j: usize) -> usize {
    j * (j - 1) / 2
}

fn c3(k: usize) -> usize {
    k * (k - 1) * (k - 2) / 6
}

/// Number of canonical triples over n points.
pub fn triple_count(n: usize) -> usize {
    c3(n)
}

impl TripleKey {
    /// Builds the key for sorted indices i < j < k.
    pub fn from_sorted(i: usize, j: usize, k: usize) -> TripleKey {
        debug_assert!(i < j && j < k);
        TripleKey { i, j, k, rank: c3(k) + c2(j) + i }
    }

    /// Inverse of the colexicographic ranking.
    pub fn unrank(rank: usize) -> TripleKey {
        let mut k = 2;
        while c3(k + 1) <= rank {
            k += 1;
        }
        let rem = rank - c3(k);
        let mut j = 1;
        while c2(j + 1) <= rem {
            j += 1;
        }
        let i = rem - c2(j);
        TripleKey { i, j, k, rank }
    }
}

/// Sorts a triple of distinct indices and reports the parity of the
/// permutation taking the sorted triple to (a, b, c): +1 even, -1 odd.
pub fn canonicalize(a: usize, b: usize, c: usize) -> Result<(TripleKey, i8)> {
    if a == b || a == c || b == c {
        return Err(Error::DuplicateIndex(a, b, c));
    }
    // Sorting network on three elements, counting swaps.
    let (mut x, mut y, mut z) = (a, b, c);
    let mut swaps = 0u8;
    if x > y {
        std::mem::swap(&mut x, &mut y);
        swaps += 1;
    }
    if y > z {
        std::mem::swap(&mut y, &mut z);
        swaps += 1;
    }
    if x > y {
        std::mem::swap(&mut x, &mut y);
        swaps += 1;
    }
    let sign = if swaps % 2 == 0 { 1 } else { -1 };
    Ok((TripleKey::from_sorted(x, y, z), sign))
}

/// An ordered list of labeled points in general position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    /// Validates pairwise-distinct points and the absence of collinear
    /// triples.
    pub fn new(points: Vec<Point>) -> Result<PointSet> {
        let n = points.len();
        for i in 0..n {
            for j in i + 1..n {
                if points[i] == points[j] {
                    return Err(Error::CollinearOrDegenerate(format!(
                        "points {i} and {j} coincide"
                    )));
                }
                for k in j + 1..n {
                    orient(points[i], points[j], points[k]).map_err(|_| {
                        Error::CollinearOrDegenerate(format!("points {i}, {j}, {k} are collinear"))
                    })?;
                }
            }
        }
        Ok(PointSet { points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, i: usize) -> Point {
        self.points[i]
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// Orientation of the triple at the given indices.
    pub fn orient_idx(&self, a: usize, b: usize, c: usize) -> Result<Orientation> {
        orient(self.points[a], self.points[b], self.points[c])
    }
}

/// Computes the full order type: a store with all C(n,3) triples known.
pub fn order_type_of(s: &PointSet) -> Result<TripleStore> {
    let n = s.len();
    let mut store = TripleStore::new(n);
    for k in 2..n {
        for j in 1..k {
            for i in 0..j {
                let o = s.orient_idx(i, j, k)?;
                store.set_canonical(TripleKey::from_sorted(i, j, k), o);
            }
        }
    }
    Ok(store)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i32, y: i32) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn orient_unit_triangle() {
        assert_eq!(orient(p(0, 0), p(1, 0), p(0, 1)).unwrap(), Orientation::Ccw);
        assert_eq!(orient(p(0, 0), p(0, 1), p(1, 0)).unwrap(), Orientation::Cw);
    }

    #[test]
    fn orient_collinear_is_error() {
        assert!(orient(p(0, 0), p(1, 1), p(2, 2)).is_err());
        assert!(orient(p(0, 0), p(0, 0), p(2, 2)).is_err());
    }

    #[test]
    fn orient_fig2a_sample() {
        // Derived with exact 64-bit arithmetic on the order-type-1874
        // coordinates before the build.
        assert_eq!(
            orient(p(9840, 6320), p(11088, 53091), p(65392, 58624)).unwrap(),
            Orientation::Cw
        );
    }

    #[test]
    fn orient_extreme_coordinates_exact() {
        // Widening to i128 keeps the determinant exact across the full i32
        // range.
        let a = p(i32::MIN, i32::MIN);
        let b = p(i32::MAX, i32::MIN + 1);
        let c = p(i32::MIN + 1, i32::MAX);
        assert!(orient(a, b, c).is_ok());
    }

    #[test]
    fn canonicalize_small_cases() {
        let key = TripleKey::from_sorted(0, 1, 2);
        assert_eq!(canonicalize(0, 1, 2).unwrap(), (key, 1));
        assert_eq!(canonicalize(1, 0, 2).unwrap(), (key, -1));
        assert_eq!(canonicalize(2, 0, 1).unwrap(), (key, 1));
        assert!(canonicalize(1, 1, 2).is_err());
    }

    #[test]
    fn canonicalize_all_six_permutations() {
        let expect = [
            ((0usize, 1usize, 2usize), 1i8),
            ((0, 2, 1), -1),
            ((1, 0, 2), -1),
            ((1, 2, 0), 1),
            ((2, 0, 1), 1),
            ((2, 1, 0), -1),
        ];
        for ((a, b, c), sign) in expect {
            let (key, s) = canonicalize(a, b, c).unwrap();
            assert_eq!((key.i, key.j, key.k), (0, 1, 2));
            assert_eq!(s, sign, "permutation ({a},{b},{c})");
        }
    }

    #[test]
    fn rank_unrank_bijection() {
        for r in 0..triple_count(12) {
            let key = TripleKey::unrank(r);
            assert!(key.i < key.j && key.j < key.k);
            assert_eq!(TripleKey::from_sorted(key.i, key.j, key.k).rank, r);
        }
    }

    #[test]
    fn order_type_square() {
        // Derived by brute-force orient() over all 4 triples of the unit
        // square in CCW order.
        let s = PointSet::new(vec![p(0, 0), p(1, 0), p(1, 1), p(0, 1)]).unwrap();
        let ot = order_type_of(&s).unwrap();
        assert_eq!(ot.known_count(), 4);
        for r in 0..4 {
            let key = TripleKey::unrank(r);
            assert_eq!(ot.get_canonical(key), Some(Orientation::Ccw));
        }
    }

    #[test]
    fn order_type_triangle() {
        let s = PointSet::new(vec![p(0, 0), p(1, 0), p(0, 1)]).unwrap();
        let ot = order_type_of(&s).unwrap();
        assert_eq!(ot.known_count(), 1);
        assert_eq!(ot.get_ordered(0, 1, 2).unwrap(), Some(Orientation::Ccw));
    }

    #[test]
    fn pointset_rejects_collinear() {
        assert!(PointSet::new(vec![p(0, 0), p(1, 0), p(2, 0)]).is_err());
        assert!(PointSet::new(vec![p(0, 0), p(0, 0), p(2, 1)]).is_err());
    }
}
