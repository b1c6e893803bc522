use num_rational::Ratio;

/// Exact non-negative rational used for every boundary ratio.
pub type Rational = Ratio<u64>;

/// Formats as `p/q`, always with an explicit denominator (`2/1`, `0/1`).
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q` or a bare integer.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: u64 = p.trim().parse().ok()?;
            let q: u64 = q.trim().parse().ok()?;
            (q != 0).then(|| Rational::new(p, q))
        }
        None => s.parse().ok().map(Rational::from_integer),
    }
}

/// A dyadic rational `2^-exponent`, the only values the graph-space metric takes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dyadic {
    pub exponent: u32,
}

impl Dyadic {
    pub fn pow2_neg(exponent: u32) -> Self {
        Dyadic { exponent }
    }

    /// Exact string form: `1`, `1/2`, `1/64`, ...
    pub fn to_exact_string(self) -> String {
        if self.exponent == 0 {
            "1".to_string()
        } else if self.exponent < 64 {
            format!("1/{}", 1u64 << self.exponent)
        } else {
            format!("1/2^{}", self.exponent)
        }
    }
}
