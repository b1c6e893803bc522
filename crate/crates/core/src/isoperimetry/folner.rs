use crate::ball::ball;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::isoperimetry::IsoProfile;
use crate::oracle::GraphOracle;
use crate::sets::{exterior_boundary, r_neighborhood, VertexSet};

/// `|∂_r F| / |F|` where `∂_r F = [F]_r \ F`.
pub fn r_boundary_ratio(oracle: &dyn GraphOracle, f: &VertexSet, r: usize) -> Result<Rational> {
    if r == 0 {
        return Err(Error::InvalidInput("r must be at least 1".into()));
    }
    if f.is_empty() {
        return Err(Error::EmptySet);
    }
    let (_, shell) = r_neighborhood(oracle, f, r)?;
    Ok(Rational::new(shell.len() as u64, f.len() as u64))
}

/// Upper bound on the Cheeger constant read off a finite profile.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheegerBounds {
    /// `min_n j(n)`; the Cheeger constant is at most this.
    pub upper: Rational,
    /// Largest `n` in the profile.
    pub certified_at: usize,
}

/// No lower bound is reported: the infimum over all `n` is not visible in a
/// finite window.
pub fn cheeger_bounds(profile: &IsoProfile) -> Result<CheegerBounds> {
    let upper = profile.entries.iter().map(|e| e.j).min().ok_or_else(|| Error::InvalidInput("empty profile".into()))?;
    let certified_at = profile.entries.iter().map(|e| e.n).max().unwrap_or(0);
    Ok(CheegerBounds { upper, certified_at })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Shape {
    /// `F_k = B(rep, k)`.
    MetricBalls,
    /// Side-`k` boxes, where the family defines them.
    Boxes,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FolnerSearch {
    /// First set along the shape family with ratio at most `eps`, with its `k` and ratio.
    pub found: Option<(usize, VertexSet, Rational)>,
    /// `(k, |∂F_k| / |F_k|)` for every evaluated `k`.
    pub trace: Vec<(usize, Rational)>,
}

/// Walks `k = 1..=k_max` along a shape family and stops at the first `F_k`
/// with `|∂F_k| / |F_k| <= eps`. An exhausted trace is evidence at this scale,
/// not a proof of non-amenability.
pub fn folner_witness(oracle: &dyn GraphOracle, eps: Rational, shape: Shape, k_max: usize) -> Result<FolnerSearch> {
    if eps == Rational::from_integer(0) {
        return Err(Error::InvalidInput("eps must be positive".into()));
    }
    let mut trace = Vec::new();
    match shape {
        Shape::MetricBalls => {
            let rep = oracle.orbit_representatives().remove(0);
            let b = ball(oracle, &rep, k_max + 1)?;
            for k in 1..=k_max {
                let inside = b.layer_end(k);
                let shell = b.layer_end(k + 1) - inside;
                let ratio = Rational::new(shell as u64, inside as u64);
                trace.push((k, ratio));
                if ratio <= eps {
                    let set: VertexSet = b.vertices[..inside].iter().cloned().collect();
                    return Ok(FolnerSearch { found: Some((k, set, ratio)), trace });
                }
            }
        }
        Shape::Boxes => {
            if oracle.box_set(1).is_none() {
                return Err(Error::UnsupportedShape { shape: "boxes".into(), graph: oracle.spec().to_string() });
            }
            for k in 1..=k_max {
                let set: VertexSet = oracle.box_set(k).unwrap_or_default().into_iter().collect();
                let ratio = Rational::new(exterior_boundary(oracle, &set).len() as u64, set.len() as u64);
                trace.push((k, ratio));
                if ratio <= eps {
                    return Ok(FolnerSearch { found: Some((k, set, ratio)), trace });
                }
            }
        }
    }
    Ok(FolnerSearch { found: None, trace })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{Grid, RegularTree};
    use crate::isoperimetry::iso_profile;
    use crate::vertex::VertexId;

    #[test]
    fn cheeger_upper_is_the_profile_minimum() {
        let p = iso_profile(&RegularTree::new(3), 4).unwrap();
        let b = cheeger_bounds(&p).unwrap();
        assert_eq!((b.upper, b.certified_at), (Rational::new(3, 2), 4));
    }

    #[test]
    fn unit_ball_ratio_on_the_line() {
        let f: VertexSet = ["(-1)", "(0)", "(1)"].into_iter().map(VertexId::from).collect();
        assert_eq!(r_boundary_ratio(&Grid::new(1), &f, 2).unwrap(), Rational::new(4, 3));
    }
}
