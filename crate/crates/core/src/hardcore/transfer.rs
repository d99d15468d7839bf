//! Linear-time partition functions of paths and cycles.

use std::fmt;
use std::str::FromStr;

use super::poly::check_lambda;
use super::scaled::Scaled;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "path" => Ok(Family::Path),
            "cycle" => Ok(Family::Cycle),
            _ => Err(Error::pre(format!("unknown family {s:?}, expected path or cycle"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
        })
    }
}

/// `(Z, Z')` of the path on `n` vertices; index shifted so that `n = -1, 0` give 1.
fn path_pair(n: usize, lam: Scaled) -> [(Scaled, Scaled); 2] {
    // (Z_{P_{i-1}}, Z'_{P_{i-1}}), (Z_{P_i}, Z'_{P_i}) starting at i = 0
    let mut prev = (Scaled::ONE, Scaled::ZERO);
    let mut cur = (Scaled::ONE, Scaled::ZERO);
    for _ in 0..n {
        // Z_i = Z_{i-1} + λ Z_{i-2};  Z'_i = Z'_{i-1} + Z_{i-2} + λ Z'_{i-2}
        let z = cur.0 + lam * prev.0;
        let dz = cur.1 + prev.0 + lam * prev.1;
        prev = cur;
        cur = (z, dz);
    }
    [prev, cur]
}

/// `Z_G(λ)` and `Z_G'(λ)` for `G` the path or cycle on `n` vertices.
pub fn transfer_z(family: Family, n: usize, lambda: f64) -> Result<(Scaled, Scaled)> {
    check_lambda(lambda)?;
    let lam = Scaled::from_f64(lambda);
    match family {
        Family::Path => {
            if n < 1 {
                return Err(Error::pre("path needs n >= 1"));
            }
            Ok(path_pair(n, lam)[1])
        }
        Family::Cycle => {
            if n < 3 {
                return Err(Error::pre(format!("cycle needs n >= 3, got {n}")));
            }
            // fix a vertex v: v out leaves P_{n-1}; v in leaves P_{n-3}
            let [_, (a, da)] = path_pair(n - 1, lam);
            let [_, (b, db)] = path_pair(n - 3, lam);
            Ok((a + lam * b, da + b + lam * db))
        }
    }
}
