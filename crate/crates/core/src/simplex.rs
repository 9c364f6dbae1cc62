//! Points of the probability simplex used as normalized type vectors, plus
//! barycentric grid enumeration.

use num_traits::Zero;

use crate::error::GameError;
use crate::rational::{format_rational, rat, Rational};

/// A point of the (m-1)-simplex: m nonnegative rationals summing exactly to 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimplexPoint {
    coords: Vec<Rational>,
}

impl SimplexPoint {
    pub fn new(coords: Vec<Rational>) -> Result<Self, GameError> {
        if coords.is_empty() {
            return Err(GameError::InvalidSimplexPoint("no coordinates".into()));
        }
        if coords.iter().any(|c| c < &Rational::zero()) {
            return Err(GameError::InvalidSimplexPoint(
                "negative coordinate".into(),
            ));
        }
        let total: Rational = coords.iter().sum();
        if total != Rational::from_integer(1.into()) {
            return Err(GameError::InvalidSimplexPoint(format!(
                "coordinates sum to {}, not 1",
                format_rational(&total)
            )));
        }
        Ok(SimplexPoint { coords })
    }

    /// Unit coordinate point `v_j` of the (m-1)-simplex (0-based `j`).
    pub fn vertex(j: usize, m: usize) -> Result<Self, GameError> {
        if j >= m {
            return Err(GameError::InvalidSimplexPoint(format!(
                "vertex index {j} out of range for dimension {m}"
            )));
        }
        let mut coords = vec![Rational::zero(); m];
        coords[j] = Rational::from_integer(1.into());
        Ok(SimplexPoint { coords })
    }

    /// Double-game convenience: scalar type `t` encoded as `(1 - t, t)`.
    pub fn from_scalar(t: &Rational) -> Result<Self, GameError> {
        SimplexPoint::new(vec![Rational::from_integer(1.into()) - t, t.clone()])
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn coord(&self, j: usize) -> &Rational {
        &self.coords[j]
    }

    /// `Some(j)` iff this point is the vertex `v_j`.
    pub fn as_vertex(&self) -> Option<usize> {
        let one = Rational::from_integer(1.into());
        self.coords.iter().position(|c| c == &one)
    }

    pub fn describe(&self) -> String {
        let parts: Vec<String> = self.coords.iter().map(format_rational).collect();
        format!("({})", parts.join(", "))
    }
}

/// All m vertices of the (m-1)-simplex, in coordinate order.
pub fn vertices(m: usize) -> Vec<SimplexPoint> {
    (0..m)
        .map(|j| SimplexPoint::vertex(j, m).expect("j < m"))
        .collect()
}

/// Barycentric grid with denominator `d`: all points `(k_1/d, ..., k_m/d)`
/// with nonnegative integer `k_j` summing to `d`, in ascending lexicographic
/// order of `(k_1, ..., k_m)`. There are `C(d+m-1, m-1)` of them.
pub fn barycentric_grid(m: usize, d: u32) -> Vec<SimplexPoint> {
    assert!(m >= 1 && d >= 1, "grid needs m >= 1 and d >= 1");
    let mut out = Vec::new();
    let mut ks = vec![0u32; m];
    fill(&mut out, &mut ks, 0, d, d);
    out
}

fn fill(out: &mut Vec<SimplexPoint>, ks: &mut Vec<u32>, pos: usize, left: u32, d: u32) {
    if pos + 1 == ks.len() {
        ks[pos] = left;
        let coords = ks.iter().map(|&k| rat(k as i64, d as i64)).collect();
        out.push(SimplexPoint { coords });
        return;
    }
    for k in 0..=left {
        ks[pos] = k;
        fill(out, ks, pos + 1, left - k, d);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_points() {
        let v = vertices(3);
        assert_eq!(v.len(), 3);
        assert_eq!(v[1].as_vertex(), Some(1));
        assert_eq!(v[1].coords(), &[rat(0, 1), rat(1, 1), rat(0, 1)]);
    }

    #[test]
    fn grid_counts_match_binomials() {
        // C(d+m-1, m-1)
        assert_eq!(barycentric_grid(3, 4).len(), 15);
        assert_eq!(barycentric_grid(3, 6).len(), 28);
        assert_eq!(barycentric_grid(2, 10).len(), 11);
    }

    #[test]
    fn grid_points_are_valid_and_sorted() {
        let pts = barycentric_grid(3, 4);
        for p in &pts {
            SimplexPoint::new(p.coords().to_vec()).unwrap();
        }
        let mut sorted = pts.clone();
        sorted.sort();
        assert_eq!(pts, sorted);
    }

    #[test]
    fn rejects_bad_points() {
        assert!(SimplexPoint::new(vec![rat(1, 2), rat(1, 3)]).is_err());
        assert!(SimplexPoint::new(vec![rat(3, 2), rat(-1, 2)]).is_err());
    }

    #[test]
    fn scalar_encoding() {
        let p = SimplexPoint::from_scalar(&rat(1, 4)).unwrap();
        assert_eq!(p.coords(), &[rat(3, 4), rat(1, 4)]);
        assert!(SimplexPoint::from_scalar(&rat(5, 4)).is_err());
    }
}
