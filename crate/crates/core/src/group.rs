//! Finite abelian groups in primary decomposition.
//!
//! A group is stored as a list of prime-power moduli; an element is the tuple
//! of its residues. The trivial group has an empty factor list. Factors are
//! kept sorted by `(prime, exponent)` ascending, which fixes element ranks and
//! makes every downstream report deterministic.

use crate::arith::{factorize, gcd, lcm, partitions, prime_power};
use crate::error::Error;
use std::fmt;
use std::str::FromStr;

/// A finite abelian group as a direct sum of cyclic groups of prime-power
/// order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    /// Prime-power moduli, sorted by `(prime, exponent)` ascending.
    factors: Vec<u64>,
}

/// An element of an [`AbelianGroup`]: one residue per factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    coords: Vec<u64>,
}

impl Element {
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    /// Human-readable label: `3` for rank-one groups, `(0,1)` otherwise.
    pub fn label(&self) -> String {
        match self.coords.len() {
            0 => "0".to_string(),
            1 => self.coords[0].to_string(),
            _ => {
                let inner: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
                format!("({})", inner.join(","))
            }
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

impl AbelianGroup {
    /// The trivial group of order 1.
    pub fn trivial() -> Self {
        AbelianGroup { factors: Vec::new() }
    }

    /// Builds the group `C_{o1} + C_{o2} + ...`, splitting composite orders
    /// into prime-power factors (Chinese remainder theorem) and sorting into
    /// canonical order. Orders equal to 1 are dropped; 0 is rejected.
    pub fn from_factor_orders(orders: &[u64]) -> Result<Self, Error> {
        let mut factors = Vec::new();
        for &o in orders {
            if o == 0 {
                return Err(Error::ZeroOrder);
            }
            for (p, e) in factorize(o) {
                factors.push(p.pow(e));
            }
        }
        factors.sort_by_key(|&f| prime_power(f).expect("factor is a prime power"));
        Ok(AbelianGroup { factors })
    }

    pub fn cyclic(n: u64) -> Result<Self, Error> {
        Self::from_factor_orders(&[n])
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    /// Factors as `(prime, exponent)` pairs, in canonical factor order.
    pub fn factor_primes(&self) -> Vec<(u64, u32)> {
        self.factors
            .iter()
            .map(|&f| prime_power(f).expect("factor is a prime power"))
            .collect()
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }

    /// Canonical serialized name, e.g. `C4xC2` or `C2xC2xC3`. Display order
    /// is primes ascending, exponents descending within a prime, so the name
    /// of the group parsed from "4,2" is `C4xC2`.
    pub fn canonical_name(&self) -> String {
        if self.factors.is_empty() {
            return "C1".to_string();
        }
        let mut display = self.factor_primes();
        display.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        let parts: Vec<String> = display
            .iter()
            .map(|&(p, k)| format!("C{}", p.pow(k)))
            .collect();
        parts.join("x")
    }

    /// Cyclic iff the factor primes are pairwise distinct.
    pub fn is_cyclic(&self) -> bool {
        let primes = self.factor_primes();
        primes.windows(2).all(|w| w[0].0 != w[1].0)
    }

    /// Returns the prime when every factor shares one prime. The trivial
    /// group is not considered a p-group.
    pub fn p_group_prime(&self) -> Option<u64> {
        let primes = self.factor_primes();
        let first = primes.first()?.0;
        primes.iter().all(|&(p, _)| p == first).then_some(first)
    }

    pub fn is_p_group(&self) -> bool {
        self.p_group_prime().is_some()
    }

    /// Number of factors with the given prime.
    pub fn sylow_multiplicity(&self, p: u64) -> usize {
        self.factor_primes().iter().filter(|&&(q, _)| q == p).count()
    }

    /// Distinct primes dividing the group order, ascending.
    pub fn distinct_primes(&self) -> Vec<u64> {
        let mut primes: Vec<u64> = self.factor_primes().iter().map(|&(p, _)| p).collect();
        primes.dedup();
        primes
    }

    /// Primes whose Sylow component is cyclic (exactly one factor).
    pub fn cyclic_sylow_primes(&self) -> Vec<u64> {
        self.distinct_primes()
            .into_iter()
            .filter(|&p| self.sylow_multiplicity(p) == 1)
            .collect()
    }

    /// Number of elements of order exactly `p` (prime): `p^m - 1` where `m`
    /// is the number of factors with prime `p`.
    pub fn order_p_element_count(&self, p: u64) -> u64 {
        p.pow(self.sylow_multiplicity(p) as u32) - 1
    }

    pub fn identity(&self) -> Element {
        Element { coords: vec![0; self.factors.len()] }
    }

    /// Decodes a rank in `0..order()` into an element. Ranks follow the
    /// lexicographic order of coordinate tuples (first factor most
    /// significant); the identity has rank 0.
    pub fn element(&self, rank: u64) -> Element {
        assert!(rank < self.order(), "rank out of range");
        let mut coords = vec![0u64; self.factors.len()];
        let mut r = rank;
        for i in (0..self.factors.len()).rev() {
            coords[i] = r % self.factors[i];
            r /= self.factors[i];
        }
        Element { coords }
    }

    pub fn rank(&self, e: &Element) -> u64 {
        assert!(self.contains(e), "element does not belong to this group");
        let mut r = 0u64;
        for (c, f) in e.coords.iter().zip(&self.factors) {
            r = r * f + c;
        }
        r
    }

    pub fn contains(&self, e: &Element) -> bool {
        e.coords.len() == self.factors.len()
            && e.coords.iter().zip(&self.factors).all(|(c, f)| c < f)
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.order()).map(|r| self.element(r))
    }

    /// Componentwise addition mod the factors.
    pub fn add(&self, a: &Element, b: &Element) -> Result<Element, Error> {
        if !self.contains(a) || !self.contains(b) {
            return Err(Error::ElementGroupMismatch);
        }
        let coords = a
            .coords
            .iter()
            .zip(&b.coords)
            .zip(&self.factors)
            .map(|((x, y), f)| (x + y) % f)
            .collect();
        Ok(Element { coords })
    }

    pub fn scalar_mul(&self, k: u64, a: &Element) -> Result<Element, Error> {
        if !self.contains(a) {
            return Err(Error::ElementGroupMismatch);
        }
        let coords = a
            .coords
            .iter()
            .zip(&self.factors)
            .map(|(c, f)| (k % f) * c % f)
            .collect();
        Ok(Element { coords })
    }

    /// Order of an element: `lcm_i(f_i / gcd(c_i, f_i))`. Equals the size of
    /// the cyclic subgroup it generates.
    pub fn element_order(&self, a: &Element) -> u64 {
        assert!(self.contains(a), "element does not belong to this group");
        a.coords
            .iter()
            .zip(&self.factors)
            .fold(1, |acc, (c, f)| lcm(acc, f / gcd(*c, *f)))
    }

    /// The cyclic subgroup `{ k*a : 0 <= k < order(a) }`, sorted by rank.
    pub fn cyclic_subgroup(&self, a: &Element) -> Vec<Element> {
        assert!(self.contains(a), "element does not belong to this group");
        let mut members = Vec::new();
        let mut cur = self.identity();
        loop {
            members.push(cur.clone());
            cur = self.add(&cur, a).expect("valid element");
            if cur == self.identity() {
                break;
            }
        }
        members.sort();
        members
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical_name())
    }
}

/// Textual group description, e.g. `"4,2"`, `"6"` or `"C4xC2"`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    text: String,
}

impl GroupSpec {
    pub fn new(text: impl Into<String>) -> Self {
        GroupSpec { text: text.into() }
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    /// Parses into the canonical group. Accepts comma-separated cyclic factor
    /// orders ("4,2", "6") and canonical names ("C4xC2").
    pub fn resolve(&self) -> Result<AbelianGroup, Error> {
        let raw = self.text.trim();
        if raw.is_empty() {
            return Err(Error::InvalidSpec {
                spec: self.text.clone(),
                reason: "empty spec".to_string(),
            });
        }
        let mut orders = Vec::new();
        for token in raw.split([',', 'x', 'X']) {
            let token = token.trim().trim_start_matches(['C', 'c']);
            let o: u64 = token.parse().map_err(|_| Error::InvalidSpec {
                spec: self.text.clone(),
                reason: format!("`{token}` is not a positive integer"),
            })?;
            if o == 0 {
                return Err(Error::InvalidSpec {
                    spec: self.text.clone(),
                    reason: "factor orders must be >= 1".to_string(),
                });
            }
            orders.push(o);
        }
        AbelianGroup::from_factor_orders(&orders)
    }

    /// Parses with an order cap; groups above the cap are rejected.
    pub fn resolve_capped(&self, cap: u64) -> Result<AbelianGroup, Error> {
        let group = self.resolve()?;
        if group.order() > cap {
            return Err(Error::OrderCapExceeded { order: group.order(), cap });
        }
        Ok(group)
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let spec = GroupSpec::new(s);
        spec.resolve()?;
        Ok(spec)
    }
}

/// All abelian groups of order `n`, one per isomorphism class, in a
/// deterministic order: per prime, exponent partitions in reverse
/// lexicographic order, combined with the smallest prime varying slowest.
/// For n = 8 this yields C8, C4xC2, C2xC2xC2.
pub fn enumerate_abelian_groups(n: u64) -> Result<Vec<AbelianGroup>, Error> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    if n == 1 {
        return Ok(vec![AbelianGroup::trivial()]);
    }
    let prime_parts: Vec<(u64, Vec<Vec<u32>>)> = factorize(n)
        .into_iter()
        .map(|(p, e)| (p, partitions(e)))
        .collect();

    let mut groups = Vec::new();
    let mut choice = vec![0usize; prime_parts.len()];
    loop {
        let mut orders = Vec::new();
        for (i, (p, parts)) in prime_parts.iter().enumerate() {
            for &k in &parts[choice[i]] {
                orders.push(p.pow(k));
            }
        }
        groups.push(AbelianGroup::from_factor_orders(&orders)?);

        // odometer over partition choices, last prime fastest
        let mut i = prime_parts.len();
        loop {
            if i == 0 {
                return Ok(groups);
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < prime_parts[i].1.len() {
                break;
            }
            choice[i] = 0;
        }
    }
}

/// All abelian groups with order in `min..=max`, ascending by order.
pub fn enumerate_abelian_groups_in(min: u64, max: u64) -> Vec<AbelianGroup> {
    (min.max(1)..=max)
        .flat_map(|n| enumerate_abelian_groups(n).expect("n >= 1"))
        .collect()
}

/// Count of generators of a cyclic group of order `n`; re-exported here next
/// to the group API for discoverability.
pub use crate::arith::euler_phi as totient;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::partition_count;
    use std::collections::BTreeSet;

    fn group(spec: &str) -> AbelianGroup {
        GroupSpec::new(spec).resolve().unwrap()
    }

    fn elem(coords: &[u64]) -> Element {
        Element { coords: coords.to_vec() }
    }

    // independent oracle: order by repeated addition
    fn order_brute(g: &AbelianGroup, a: &Element) -> u64 {
        let mut cur = a.clone();
        let mut k = 1;
        while cur != g.identity() {
            cur = g.add(&cur, a).unwrap();
            k += 1;
        }
        k
    }

    #[test]
    fn add_examples() {
        let g = group("2,3");
        assert_eq!(g.add(&elem(&[1, 2]), &elem(&[1, 2])).unwrap(), elem(&[0, 1]));
        for x in g.elements() {
            assert_eq!(g.add(&g.identity(), &x).unwrap(), x);
        }
        let c4 = group("4");
        assert_eq!(c4.add(&elem(&[3]), &elem(&[3])).unwrap(), elem(&[2]));
        assert!(matches!(
            c4.add(&elem(&[3]), &elem(&[1, 1])),
            Err(Error::ElementGroupMismatch)
        ));
    }

    #[test]
    fn element_order_examples() {
        let g = group("2,3");
        assert_eq!(g.element_order(&g.identity()), 1);
        assert_eq!(g.element_order(&elem(&[1, 0])), 2);
        let h = group("2,4");
        // brute-force derived: (1,1) has order 4 in C2+C4
        assert_eq!(order_brute(&h, &elem(&[1, 1])), 4);
        assert_eq!(h.element_order(&elem(&[1, 1])), 4);
    }

    #[test]
    fn element_order_matches_brute_force_up_to_64() {
        for g in enumerate_abelian_groups_in(1, 64) {
            for a in g.elements() {
                assert_eq!(g.element_order(&a), order_brute(&g, &a), "{g} {a}");
            }
        }
    }

    #[test]
    fn lagrange_and_subgroup_cardinality_up_to_64() {
        for g in enumerate_abelian_groups_in(1, 64) {
            for a in g.elements() {
                let o = g.element_order(&a);
                assert_eq!(g.cyclic_subgroup(&a).len() as u64, o);
                assert_eq!(g.order() % o, 0, "Lagrange in {g}");
            }
        }
    }

    // element of a cyclic group corresponding to the integer k of Z/n
    fn int_elem(g: &AbelianGroup, k: u64) -> Element {
        elem(&g.factors().iter().map(|f| k % f).collect::<Vec<_>>())
    }

    #[test]
    fn cyclic_subgroup_examples() {
        let c6 = group("6");
        assert_eq!(c6.cyclic_subgroup(&c6.identity()), vec![c6.identity()]);
        // <2> in Z/6 is {0, 2, 4}
        let mut sub = c6.cyclic_subgroup(&int_elem(&c6, 2));
        sub.sort();
        let mut expected = vec![int_elem(&c6, 0), int_elem(&c6, 2), int_elem(&c6, 4)];
        expected.sort();
        assert_eq!(sub, expected);

        let h = group("2,4");
        let sub: Vec<Element> = h.cyclic_subgroup(&elem(&[0, 1]));
        assert_eq!(
            sub,
            vec![elem(&[0, 0]), elem(&[0, 1]), elem(&[0, 2]), elem(&[0, 3])]
        );
    }

    #[test]
    fn enumerate_examples() {
        let names: Vec<String> = enumerate_abelian_groups(8)
            .unwrap()
            .iter()
            .map(|g| g.canonical_name())
            .collect();
        assert_eq!(names, vec!["C8", "C4xC2", "C2xC2xC2"]);

        let names6: Vec<String> = enumerate_abelian_groups(6)
            .unwrap()
            .iter()
            .map(|g| g.canonical_name())
            .collect();
        assert_eq!(names6, vec!["C2xC3"]);

        let names12: Vec<String> = enumerate_abelian_groups(12)
            .unwrap()
            .iter()
            .map(|g| g.canonical_name())
            .collect();
        assert_eq!(names12, vec!["C4xC3", "C2xC2xC3"]);

        assert!(matches!(enumerate_abelian_groups(0), Err(Error::ZeroOrder)));
    }

    #[test]
    fn enumerate_counts_and_distinctness_up_to_128() {
        for n in 1..=128u64 {
            let groups = enumerate_abelian_groups(n).unwrap();
            let expected: u64 = factorize(n)
                .into_iter()
                .map(|(_, e)| partition_count(e))
                .product();
            assert_eq!(groups.len() as u64, expected.max(1), "count for {n}");
            // pairwise non-isomorphic: distinguished by the multiset of
            // element orders
            let mut seen = BTreeSet::new();
            for g in &groups {
                let mut orders: Vec<u64> = g.elements().map(|a| g.element_order(&a)).collect();
                orders.sort_unstable();
                assert!(seen.insert(orders), "duplicate isomorphism class at {n}");
            }
        }
    }

    #[test]
    fn cyclic_and_p_group_flags() {
        assert!(group("2,3").is_cyclic());
        assert!(!group("2,3").is_p_group());
        assert!(!group("2,2").is_cyclic());
        assert_eq!(group("2,2").p_group_prime(), Some(2));
        assert!(group("4,3").is_cyclic());
        assert!(!group("4,3").is_p_group());
        assert!(AbelianGroup::trivial().is_cyclic());
        assert!(!AbelianGroup::trivial().is_p_group());
    }

    #[test]
    fn spec_parsing_and_canonical_names() {
        assert_eq!(group("4,2").canonical_name(), "C4xC2");
        assert_eq!(group("6").factors(), &[2, 3]);
        assert_eq!(group("6").canonical_name(), "C2xC3");
        assert_eq!(group("C4xC2"), group("4,2"));
        assert_eq!(group("12").factors(), &[4, 3]);
        assert_eq!(group("1").order(), 1);
        assert!(GroupSpec::new("abc").resolve().is_err());
        assert!(GroupSpec::new("2,0").resolve().is_err());
        assert!(GroupSpec::new("").resolve().is_err());
        // canonical name round-trips through the parser
        for g in enumerate_abelian_groups_in(1, 40) {
            assert_eq!(GroupSpec::new(g.canonical_name()).resolve().unwrap(), g);
        }
    }

    #[test]
    fn spec_cap_is_enforced() {
        assert!(matches!(
            GroupSpec::new("101").resolve_capped(100),
            Err(Error::OrderCapExceeded { order: 101, cap: 100 })
        ));
        assert!(GroupSpec::new("100").resolve_capped(100).is_ok());
    }

    #[test]
    fn same_order_dichotomy_fails_in_c2_c4() {
        // the audited dichotomy: same-order elements generate either the same
        // subgroup or subgroups meeting only in the identity. (0,1) and (1,1)
        // in C2+C4 violate it: both have order 4, distinct subgroups, and
        // share (0,2).
        let g = group("2,4");
        let a = elem(&[0, 1]);
        let b = elem(&[1, 1]);
        assert_eq!(g.element_order(&a), 4);
        assert_eq!(g.element_order(&b), 4);
        let sa = g.cyclic_subgroup(&a);
        let sb = g.cyclic_subgroup(&b);
        assert_ne!(sa, sb);
        let shared = elem(&[0, 2]);
        assert!(sa.contains(&shared) && sb.contains(&shared));
    }

    #[test]
    fn ranks_round_trip() {
        for g in enumerate_abelian_groups_in(1, 30) {
            for (r, a) in g.elements().enumerate() {
                assert_eq!(g.rank(&a), r as u64);
                assert_eq!(g.element(r as u64), a);
            }
        }
    }
}
