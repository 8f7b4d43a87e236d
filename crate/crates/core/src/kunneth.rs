//! Degree-wise integral cohomology of a product of two weighted
//! projective orbifolds, from the Kunneth formula
//!
//! ```text
//! H^d(X x Y) = (+)_{i+j=d} H^i(X) (x) H^j(Y)  (+)  (+)_{i+j=d+1} Tor(H^i(X), H^j(Y))
//! ```
//!
//! The sequence splits for finitely generated groups, so the direct sum is
//! the group itself. Only groups are computed, not the product ring.

use crate::abelian::{FgAbGroup, GradedGroups};
use crate::arith::WeightVector;
use crate::orbifold::OrbifoldRing;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductGroups {
    pub factors: (OrbifoldRing, OrbifoldRing),
    pub groups: GradedGroups<u32>,
}

/// The group in total degree `d`, given factor groups through degree `d + 1`.
pub fn kunneth_degree(
    a: impl Fn(u32) -> FgAbGroup,
    b: impl Fn(u32) -> FgAbGroup,
    d: u32,
) -> FgAbGroup {
    let tensor: FgAbGroup = (0..=d).map(|i| a(i).tensor(&b(d - i))).sum();
    let tor: FgAbGroup = (0..=d + 1).map(|i| a(i).tor(&b(d + 1 - i))).sum();
    tensor.direct_sum(&tor)
}

pub fn product_groups(a: &WeightVector, b: &WeightVector, max_degree: u32) -> ProductGroups {
    let ra = OrbifoldRing::new(a.clone());
    let rb = OrbifoldRing::new(b.clone());
    let mut groups = GradedGroups::new(max_degree);
    for d in 0..=max_degree {
        let g = kunneth_degree(|i| ra.group_at_degree(i), |j| rb.group_at_degree(j), d);
        groups.add(d, &g);
    }
    ProductGroups {
        factors: (ra, rb),
        groups,
    }
}

/// Smallest odd degree `<= max_degree` whose group is nonzero.
pub fn odd_torsion_witness(
    a: &WeightVector,
    b: &WeightVector,
    max_degree: u32,
) -> Option<(u32, FgAbGroup)> {
    product_groups(a, b, max_degree)
        .groups
        .iter()
        .find(|(d, g)| *d % 2 == 1 && !g.is_zero())
        .map(|(d, g)| (*d, g.clone()))
}
