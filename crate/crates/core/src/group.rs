//! Finite groups as Cayley tables.

use std::collections::HashMap;

use crate::{Error, Limits, Result};

/// A finite group stored as its full multiplication table.
///
/// Elements are the indices `0..order`. Groups are immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Group {
    order: usize,
    mul: Vec<usize>,
    identity: usize,
    inv: Vec<usize>,
    label: String,
}

/// A permutation of `0..degree` in image form: `p[i]` is the image of `i`.
pub type Permutation = Vec<usize>;

impl Group {
    /// Builds a group from a table already known to satisfy the group axioms.
    fn from_table_unchecked(order: usize, mul: Vec<usize>, identity: usize, label: String) -> Self {
        let mut inv = vec![0; order];
        for a in 0..order {
            let row = &mul[a * order..(a + 1) * order];
            inv[a] = row.iter().position(|&x| x == identity).expect("group table has inverses");
        }
        Group {
            order,
            mul,
            identity,
            inv,
            label,
        }
    }

    /// The cyclic group `Z_n` under addition mod `n`, labelled `Cn`.
    pub fn cyclic(n: usize, limits: &Limits) -> Result<Group> {
        if n == 0 || n > limits.max_order {
            return Err(Error::InvalidOrder {
                order: n,
                cap: limits.max_order,
            });
        }
        let mul = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        Ok(Self::from_table_unchecked(n, mul, 0, format!("C{n}")))
    }

    /// The dihedral group of order `2n`, labelled `Dn`.
    ///
    /// Element `f * n + k` stands for `r^k s^f`, with `r` of order `n` and
    /// `s r s = r^-1`.
    pub fn dihedral(n: usize, limits: &Limits) -> Result<Group> {
        if n == 0 || 2 * n > limits.max_order {
            return Err(Error::InvalidOrder {
                order: 2 * n,
                cap: limits.max_order,
            });
        }
        let order = 2 * n;
        let mut mul = vec![0; order * order];
        for a in 0..order {
            let (fa, ka) = (a / n, a % n);
            for b in 0..order {
                let (fb, kb) = (b / n, b % n);
                let k = if fa == 0 { ka + kb } else { ka + n - kb } % n;
                mul[a * order + b] = ((fa + fb) % 2) * n + k;
            }
        }
        Ok(Self::from_table_unchecked(order, mul, 0, format!("D{n}")))
    }

    /// Componentwise product. Pair `(i, j)` gets index `i * |h| + j`.
    pub fn direct_product(g: &Group, h: &Group, limits: &Limits) -> Result<Group> {
        let order = g.order * h.order;
        if order > limits.max_order {
            return Err(Error::OrderCapExceeded {
                what: format!("{}x{}", g.label, h.label),
                reached: order,
                cap: limits.max_order,
            });
        }
        let m = h.order;
        let mut mul = vec![0; order * order];
        for a in 0..order {
            for b in 0..order {
                mul[a * order + b] = g.mul(a / m, b / m) * m + h.mul(a % m, b % m);
            }
        }
        let identity = g.identity * m + h.identity;
        Ok(Self::from_table_unchecked(
            order,
            mul,
            identity,
            format!("{}x{}", g.label, h.label),
        ))
    }

    /// Closes a set of permutations of `0..degree` under composition.
    ///
    /// Elements are numbered in breadth-first discovery order starting with
    /// the identity at index 0. The product `a * b` applies `a` first.
    pub fn from_permutation_generators(
        degree: usize,
        gens: &[Permutation],
        limits: &Limits,
    ) -> Result<Group> {
        for (i, g) in gens.iter().enumerate() {
            check_permutation(degree, g)
                .map_err(|m| Error::MalformedPermutation(format!("generator {i}: {m}")))?;
        }
        let compose = |a: &[usize], b: &[usize]| -> Permutation { a.iter().map(|&x| b[x]).collect() };

        let mut elements: Vec<Permutation> = vec![(0..degree).collect()];
        let mut index: HashMap<Permutation, usize> = HashMap::new();
        index.insert(elements[0].clone(), 0);
        let mut next = 0;
        while next < elements.len() {
            for s in gens {
                let y = compose(&elements[next], s);
                if !index.contains_key(&y) {
                    if elements.len() == limits.max_order {
                        return Err(Error::OrderCapExceeded {
                            what: format!("permutation closure on {degree} points"),
                            reached: elements.len() + 1,
                            cap: limits.max_order,
                        });
                    }
                    index.insert(y.clone(), elements.len());
                    elements.push(y);
                }
            }
            next += 1;
        }

        let order = elements.len();
        let mut mul = vec![0; order * order];
        for (a, pa) in elements.iter().enumerate() {
            for (b, pb) in elements.iter().enumerate() {
                mul[a * order + b] = index[&compose(pa, pb)];
            }
        }
        Ok(Self::from_table_unchecked(order, mul, 0, format!("perm{degree}")))
    }

    /// Validates a Cayley table and builds the group it describes.
    ///
    /// Checks shape, entry range, the Latin property, an identity, inverses,
    /// and associativity over all `n^3` triples.
    pub fn from_cayley_table(table: &[Vec<usize>], limits: &Limits) -> Result<Group> {
        let n = table.len();
        if n == 0 || n > limits.max_order {
            return Err(Error::InvalidOrder {
                order: n,
                cap: limits.max_order,
            });
        }
        for (r, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotLatin(format!("row {r} has {} entries, expected {n}", row.len())));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= n) {
                return Err(Error::NotLatin(format!("row {r} has entry {x} out of range")));
            }
        }
        for r in 0..n {
            let mut seen = vec![false; n];
            for &x in &table[r] {
                if std::mem::replace(&mut seen[x], true) {
                    return Err(Error::NotLatin(format!("row {r} repeats {x}")));
                }
            }
        }
        for c in 0..n {
            let mut seen = vec![false; n];
            for row in table {
                let x = row[c];
                if std::mem::replace(&mut seen[x], true) {
                    return Err(Error::NotLatin(format!("column {c} repeats {x}")));
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or(Error::NoIdentity)?;
        for a in 0..n {
            if !(0..n).any(|b| table[a][b] == identity && table[b][a] == identity) {
                return Err(Error::NoInverse(a));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::NotAssociative { a, b, c });
                    }
                }
            }
        }
        let mul = table.iter().flatten().copied().collect();
        Ok(Self::from_table_unchecked(n, mul, identity, format!("table{n}")))
    }

    /// `S_n` acting on `0..n`, labelled `Sn`.
    pub fn symmetric(n: usize, limits: &Limits) -> Result<Group> {
        if n == 0 {
            return Err(Error::InvalidOrder {
                order: 0,
                cap: limits.max_order,
            });
        }
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(cycle(n, &[0, 1]));
            gens.push(cycle(n, &(0..n).collect::<Vec<_>>()));
        }
        Ok(Self::from_permutation_generators(n, &gens, limits)?.with_label(format!("S{n}")))
    }

    /// `A_n` acting on `0..n`, generated by the 3-cycles `(0 1 k)`.
    pub fn alternating(n: usize, limits: &Limits) -> Result<Group> {
        if n == 0 {
            return Err(Error::InvalidOrder {
                order: 0,
                cap: limits.max_order,
            });
        }
        let gens: Vec<Permutation> = (2..n).map(|k| cycle(n, &[0, 1, k])).collect();
        Ok(Self::from_permutation_generators(n, &gens, limits)?.with_label(format!("A{n}")))
    }

    /// The quaternion group `Q8`, as its right regular representation generated by `i` and `j`.
    pub fn quaternion(limits: &Limits) -> Result<Group> {
        let gens = [quaternion_right_mul(1), quaternion_right_mul(2)];
        Ok(Self::from_permutation_generators(8, &gens, limits)?.with_label("Q8"))
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// `x a x^-1`.
    #[inline]
    pub fn conjugate(&self, x: usize, a: usize) -> usize {
        self.mul(self.mul(x, a), self.inv[x])
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// Row `a` of the table as a slice.
    pub fn row(&self, a: usize) -> &[usize] {
        &self.mul[a * self.order..(a + 1) * self.order]
    }

    pub fn element_order(&self, a: usize) -> Result<usize> {
        if a >= self.order {
            return Err(Error::IndexOutOfRange {
                index: a,
                order: self.order,
            });
        }
        Ok(self.order_of(a))
    }

    pub(crate) fn order_of(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.order).map(|a| self.order_of(a)).collect()
    }

    /// Element orders sorted ascending; a cheap isomorphism invariant.
    pub fn order_multiset(&self) -> Vec<usize> {
        let mut v = self.element_orders();
        v.sort_unstable();
        v
    }

    pub fn is_cyclic(&self) -> bool {
        (0..self.order).any(|a| self.order_of(a) == self.order)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.commute(a, b)))
    }

    /// Re-checks the table invariants: Latin rows and columns, two-sided
    /// identity, and inverses.
    pub fn check_table(&self) -> Result<()> {
        let n = self.order;
        for a in 0..n {
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for b in 0..n {
                if std::mem::replace(&mut row[self.mul(a, b)], true) {
                    return Err(Error::NotLatin(format!("row {a}")));
                }
                if std::mem::replace(&mut col[self.mul(b, a)], true) {
                    return Err(Error::NotLatin(format!("column {a}")));
                }
            }
            if self.mul(self.identity, a) != a || self.mul(a, self.identity) != a {
                return Err(Error::NoIdentity);
            }
            if self.mul(a, self.inv[a]) != self.identity || self.mul(self.inv[a], a) != self.identity {
                return Err(Error::NoInverse(a));
            }
        }
        Ok(())
    }
}

fn check_permutation(degree: usize, p: &[usize]) -> std::result::Result<(), String> {
    if p.len() != degree {
        return Err(format!("has {} points, expected {degree}", p.len()));
    }
    let mut seen = vec![false; degree];
    for &x in p {
        if x >= degree {
            return Err(format!("point {x} out of range 0..{degree}"));
        }
        if std::mem::replace(&mut seen[x], true) {
            return Err(format!("point {x} is hit twice"));
        }
    }
    Ok(())
}

/// The permutation of `0..degree` given by a single cycle.
pub fn cycle(degree: usize, points: &[usize]) -> Permutation {
    let mut p: Permutation = (0..degree).collect();
    for (i, &x) in points.iter().enumerate() {
        p[x] = points[(i + 1) % points.len()];
    }
    p
}

// Q8 elements are `sign * 4 + unit` with units 1, i, j, k.
fn quaternion_mul(a: usize, b: usize) -> usize {
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let (sign, unit) = UNIT[a % 4][b % 4];
    ((a / 4 + b / 4 + sign) % 2) * 4 + unit
}

fn quaternion_right_mul(g: usize) -> Permutation {
    (0..8).map(|x| quaternion_mul(x, g)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn cyclic_basics() {
        let c1 = Group::cyclic(1, &lim()).unwrap();
        assert_eq!(c1.order(), 1);
        assert_eq!(c1.label(), "C1");
        let c6 = Group::cyclic(6, &lim()).unwrap();
        assert_eq!(c6.element_order(1).unwrap(), 6);
        assert_eq!(c6.element_order(0).unwrap(), 1);
        assert_eq!(c6.element_order(2).unwrap(), 3);
        assert!(matches!(c6.element_order(6), Err(Error::IndexOutOfRange { .. })));
        assert!(Group::cyclic(0, &lim()).is_err());
        assert!(matches!(
            Group::cyclic(201, &lim()),
            Err(Error::InvalidOrder { order: 201, cap: 200 })
        ));
        assert!(Group::cyclic(300, &Limits::with_max_order(300)).is_ok());
    }

    #[test]
    fn dihedral_basics() {
        let d1 = Group::dihedral(1, &lim()).unwrap();
        assert_eq!(d1.order(), 2);
        assert!(d1.is_cyclic());
        let d3 = Group::dihedral(3, &lim()).unwrap();
        assert_eq!(d3.order(), 6);
        assert!(!d3.is_abelian());
        d3.check_table().unwrap();
        // s r s = r^-1
        let (r, s) = (1, 3);
        assert_eq!(d3.mul(d3.mul(s, r), s), d3.inv(r));
        assert_eq!(d3.element_order(r).unwrap(), 3);
        assert_eq!(d3.element_order(s).unwrap(), 2);
        assert!(Group::dihedral(101, &lim()).is_err());
    }

    #[test]
    fn direct_products() {
        let c1 = Group::cyclic(1, &lim()).unwrap();
        let c2 = Group::cyclic(2, &lim()).unwrap();
        let c3 = Group::cyclic(3, &lim()).unwrap();
        let c6 = Group::cyclic(6, &lim()).unwrap();
        let p = Group::direct_product(&c1, &c6, &lim()).unwrap();
        assert_eq!(p.label(), "C1xC6");
        assert_eq!(p.order_multiset(), c6.order_multiset());
        let v4 = Group::direct_product(&c2, &c2, &lim()).unwrap();
        assert!(v4.element_orders().iter().all(|&o| o <= 2));
        assert!(!v4.is_cyclic());
        let c2c3 = Group::direct_product(&c2, &c3, &lim()).unwrap();
        assert!(c2c3.element_orders().contains(&6));
        assert!(c2c3.is_cyclic());
        let big = Group::cyclic(20, &lim()).unwrap();
        assert!(matches!(
            Group::direct_product(&big, &big, &lim()),
            Err(Error::OrderCapExceeded { .. })
        ));
    }

    #[test]
    fn permutation_closure() {
        let s3 = Group::from_permutation_generators(3, &[cycle(3, &[0, 1]), cycle(3, &[0, 1, 2])], &lim()).unwrap();
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.identity(), 0);
        s3.check_table().unwrap();
        let trivial = Group::from_permutation_generators(1, &[], &lim()).unwrap();
        assert_eq!(trivial.order(), 1);
        let q8 = Group::quaternion(&lim()).unwrap();
        assert_eq!(q8.order(), 8);
        assert_eq!(q8.element_orders().iter().filter(|&&o| o == 2).count(), 1);
        assert!(!q8.is_abelian());
    }

    #[test]
    fn transpositions_have_order_two() {
        let s3 = Group::symmetric(3, &lim()).unwrap();
        // generator (0 1) sits at index 1 in discovery order
        assert_eq!(s3.element_order(1).unwrap(), 2);
        let orders = s3.order_multiset();
        assert_eq!(orders, vec![1, 2, 2, 2, 3, 3]);
    }

    #[test]
    fn permutation_errors() {
        assert!(matches!(
            Group::from_permutation_generators(3, &[vec![0, 0, 1]], &lim()),
            Err(Error::MalformedPermutation(_))
        ));
        assert!(matches!(
            Group::from_permutation_generators(3, &[vec![0, 1]], &lim()),
            Err(Error::MalformedPermutation(_))
        ));
        match Group::symmetric(6, &lim()) {
            Err(Error::OrderCapExceeded { reached, cap, .. }) => {
                assert_eq!(cap, 200);
                assert_eq!(reached, 201);
            }
            other => panic!("expected cap error, got {other:?}"),
        }
    }

    #[test]
    fn symmetric_and_alternating_orders() {
        for (n, s, a) in [(1, 1, 1), (2, 2, 1), (3, 6, 3), (4, 24, 12), (5, 120, 60)] {
            assert_eq!(Group::symmetric(n, &lim()).unwrap().order(), s);
            assert_eq!(Group::alternating(n, &lim()).unwrap().order(), a);
        }
    }

    #[test]
    fn cayley_tables() {
        let t = Group::from_cayley_table(&[vec![0]], &lim()).unwrap();
        assert_eq!(t.order(), 1);
        let z3: Vec<Vec<usize>> = (0..3).map(|a| (0..3).map(|b| (a + b) % 3).collect()).collect();
        let g = Group::from_cayley_table(&z3, &lim()).unwrap();
        assert_eq!(g.order_multiset(), Group::cyclic(3, &lim()).unwrap().order_multiset());
        assert!(Group::from_cayley_table(&[vec![0, 1], vec![1, 1]], &lim()).is_err());
        assert!(matches!(
            Group::from_cayley_table(&[vec![0, 2], vec![1, 0]], &lim()),
            Err(Error::NotLatin(_))
        ));
        assert!(matches!(Group::from_cayley_table(&[], &lim()), Err(Error::InvalidOrder { .. })));
    }

    #[test]
    fn cayley_table_non_associative() {
        // A Latin square with identity 0 that is not a group (order 5 loop).
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            Group::from_cayley_table(&t, &lim()),
            Err(Error::NotAssociative { .. })
        ));
    }

    #[test]
    fn cayley_table_without_identity() {
        // a * b = -(a + b) mod 3
        let t = vec![vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]];
        assert!(matches!(Group::from_cayley_table(&t, &lim()), Err(Error::NoIdentity)));
    }
}
