//! Finitely generated abelian groups in invariant-factor form, and
//! degree-indexed listings of them.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

/// `Z^free_rank + Z/d_1 + ... + Z/d_r` with `2 <= d_1 | d_2 | ... | d_r`.
///
/// The representation is canonical, so structural equality is group isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FgAbGroup {
    free_rank: usize,
    torsion: Vec<BigUint>,
}

impl FgAbGroup {
    /// Builds the group `Z^free_rank + (+)_i Z/t_i` from arbitrary cyclic
    /// orders. An order of `0` is read as a free summand, `1` as trivial.
    pub fn new(free_rank: usize, torsion: impl IntoIterator<Item = BigUint>) -> Self {
        let mut free_rank = free_rank;
        let mut orders = Vec::new();
        for t in torsion {
            if t.is_zero() {
                free_rank += 1;
            } else if !t.is_one() {
                orders.push(t);
            }
        }
        FgAbGroup {
            free_rank,
            torsion: invariant_factors(orders),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        FgAbGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// `Z/order`, with `Z/0 = Z`.
    pub fn cyclic(order: impl Into<BigUint>) -> Self {
        Self::new(0, [order.into()])
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigUint] {
        &self.torsion
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_torsion(&self) -> bool {
        self.free_rank == 0
    }

    /// True when some element has order exactly `n` (for `n >= 2`).
    pub fn has_element_of_order(&self, n: &BigUint) -> bool {
        self.torsion.iter().any(|d| (d % n).is_zero())
    }

    pub fn direct_sum(&self, other: &FgAbGroup) -> FgAbGroup {
        FgAbGroup::new(
            self.free_rank + other.free_rank,
            self.torsion.iter().chain(&other.torsion).cloned(),
        )
    }

    pub fn tensor(&self, other: &FgAbGroup) -> FgAbGroup {
        let mut orders = Vec::new();
        for _ in 0..other.free_rank {
            orders.extend(self.torsion.iter().cloned());
        }
        for _ in 0..self.free_rank {
            orders.extend(other.torsion.iter().cloned());
        }
        orders.extend(self.pairwise_gcds(other));
        FgAbGroup::new(self.free_rank * other.free_rank, orders)
    }

    pub fn tor(&self, other: &FgAbGroup) -> FgAbGroup {
        FgAbGroup::new(0, self.pairwise_gcds(other))
    }

    fn pairwise_gcds<'a>(&'a self, other: &'a FgAbGroup) -> impl Iterator<Item = BigUint> + 'a {
        self.torsion
            .iter()
            .flat_map(move |a| other.torsion.iter().map(move |b| a.gcd(b)))
    }
}

/// Pairwise gcd/lcm absorption: after processing every pair `i < j`, the
/// list is a divisibility chain.
fn invariant_factors(mut orders: Vec<BigUint>) -> Vec<BigUint> {
    let len = orders.len();
    for i in 0..len {
        for j in i + 1..len {
            let g = orders[i].gcd(&orders[j]);
            let l = orders[i].lcm(&orders[j]);
            orders[i] = g;
            orders[j] = l;
        }
    }
    orders.retain(|d| !d.is_one());
    orders
}

impl std::iter::Sum for FgAbGroup {
    fn sum<I: Iterator<Item = FgAbGroup>>(iter: I) -> Self {
        iter.fold(FgAbGroup::zero(), |acc, g| acc.direct_sum(&g))
    }
}

impl fmt::Display for FgAbGroup {
    /// `0`, `Z`, `Z^2 + Z/2 + Z/4`, ...
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        f.write_str(&parts.join(" + "))
    }
}

/// Degree-indexed groups, complete up to `max_degree`: any degree not
/// stored and not above the bound carries the zero group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedGroups<D: Ord> {
    groups: BTreeMap<D, FgAbGroup>,
    max_degree: D,
}

impl<D: Ord + Clone> GradedGroups<D> {
    pub fn new(max_degree: D) -> Self {
        GradedGroups {
            groups: BTreeMap::new(),
            max_degree,
        }
    }

    pub fn max_degree(&self) -> &D {
        &self.max_degree
    }

    /// Adds `group` as a direct summand in `degree`. Degrees above the
    /// bound are ignored.
    pub fn add(&mut self, degree: D, group: &FgAbGroup) {
        if degree > self.max_degree || group.is_zero() {
            return;
        }
        let slot = self.groups.entry(degree).or_default();
        *slot = slot.direct_sum(group);
    }

    /// The group in `degree`, or `None` if `degree` exceeds the listed range.
    pub fn get(&self, degree: &D) -> Option<FgAbGroup> {
        if *degree > self.max_degree {
            return None;
        }
        Some(self.groups.get(degree).cloned().unwrap_or_default())
    }

    /// Nonzero groups in increasing degree.
    pub fn iter(&self) -> impl Iterator<Item = (&D, &FgAbGroup)> {
        self.groups.iter()
    }
}

impl GradedGroups<u32> {
    /// Every degree `0..=max_degree`, zero groups included.
    pub fn dense(&self) -> Vec<(u32, FgAbGroup)> {
        (0..=self.max_degree)
            .map(|d| (d, self.get(&d).unwrap_or_default()))
            .collect()
    }
}
