//! Discriminant groups `L*/L` with their quadratic forms, and brute-force
//! enumeration of `O(q)`.

use crate::exact::{QmodTwo, Rational, ZMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use std::collections::BTreeSet;

/// `L*/L ≅ ⊕ ℤ/dᵢ` for a nondegenerate even lattice given by its Gram matrix.
#[derive(Clone, Debug)]
pub struct DiscGroup {
    gram: ZMatrix,
    factors: Vec<i64>,
    /// Dual-lattice lifts of the cyclic generators, in lattice coordinates.
    lifts: Vec<Vec<Rational>>,
    /// Rows of the Smith transform `U`; applied to `G·x` they read off class coordinates.
    reader: Vec<Vec<BigInt>>,
}

impl DiscGroup {
    pub fn new(gram: &ZMatrix) -> Self {
        let n = gram.rows();
        let (u, s, v) = gram.smith_normal_form();
        let mut factors = Vec::new();
        let mut lifts = Vec::new();
        let mut reader = Vec::new();
        for i in 0..n {
            let d = s.get(i, i).clone();
            assert!(!d.is_zero(), "degenerate Gram matrix");
            if d.is_one() {
                continue;
            }
            let dr = Rational::from_integer(d.clone());
            lifts.push((0..n).map(|r| Rational::from_integer(v.get(r, i).clone()) / &dr).collect());
            reader.push(u.row(i).to_vec());
            factors.push(d.to_i64().expect("small invariant factor"));
        }
        DiscGroup { gram: gram.clone(), factors, lifts, reader }
    }

    pub fn factors(&self) -> &[i64] {
        &self.factors
    }

    pub fn order(&self) -> usize {
        self.factors.iter().product::<i64>() as usize
    }

    pub fn gram(&self) -> &ZMatrix {
        &self.gram
    }

    /// Class coordinates of a dual vector; `None` if `x` is not in `L*`.
    pub fn coords(&self, x: &[Rational]) -> Option<Vec<i64>> {
        let gx = self.gram.mul_vec_rational(x);
        if !gx.iter().all(|c| c.is_integer()) {
            return None;
        }
        let gx: Vec<BigInt> = gx.into_iter().map(|c| c.to_integer()).collect();
        Some(
            self.reader
                .iter()
                .zip(&self.factors)
                .map(|(row, d)| {
                    let t: BigInt = row.iter().zip(&gx).map(|(a, b)| a * b).sum();
                    t.mod_floor(&BigInt::from(*d)).to_i64().expect("reduced")
                })
                .collect(),
        )
    }

    pub fn lift(&self, k: &[i64]) -> Vec<Rational> {
        let n = self.gram.rows();
        let mut x = vec![Rational::zero(); n];
        for (ki, l) in k.iter().zip(&self.lifts) {
            for (xi, li) in x.iter_mut().zip(l) {
                *xi += li * Rational::from_integer((*ki).into());
            }
        }
        x
    }

    pub fn normalize(&self, k: &[i64]) -> Vec<i64> {
        k.iter().zip(&self.factors).map(|(a, d)| a.rem_euclid(*d)).collect()
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        self.normalize(&a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<_>>())
    }

    pub fn neg(&self, a: &[i64]) -> Vec<i64> {
        self.normalize(&a.iter().map(|x| -x).collect::<Vec<_>>())
    }

    pub fn is_zero(&self, a: &[i64]) -> bool {
        a.iter().all(|x| *x == 0)
    }

    pub fn element_order(&self, a: &[i64]) -> i64 {
        a.iter().zip(&self.factors).map(|(x, d)| d / x.gcd(d)).fold(1, |acc, o| acc.lcm(&o))
    }

    /// All elements in lexicographic coordinate order.
    pub fn elements(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![]];
        for d in &self.factors {
            out = out
                .into_iter()
                .flat_map(|p| {
                    (0..*d).map(move |i| {
                        let mut q = p.clone();
                        q.push(i);
                        q
                    })
                })
                .collect();
        }
        out
    }

    pub fn q_vec(&self, x: &[Rational]) -> QmodTwo {
        QmodTwo::new(self.gram.bilinear(x, x))
    }

    pub fn q(&self, k: &[i64]) -> QmodTwo {
        self.q_vec(&self.lift(k))
    }

    pub fn index_of(&self, k: &[i64]) -> usize {
        let k = self.normalize(k);
        k.iter().zip(&self.factors).fold(0, |acc, (x, d)| acc * *d as usize + *x as usize)
    }
}

/// A group automorphism as a permutation of element indices.
pub type Automorphism = Vec<usize>;

/// Every automorphism of the group that preserves `q`.
///
/// Generator images range over all elements; a choice is kept when orders are
/// compatible, the induced map is bijective, and `q` is preserved everywhere.
pub fn enumerate_oq(g: &DiscGroup) -> Vec<Automorphism> {
    let elems = g.elements();
    let qs: Vec<QmodTwo> = elems.iter().map(|e| g.q(e)).collect();
    let r = g.factors().len();
    let mut out = Vec::new();
    let mut choice = vec![0usize; r];
    loop {
        let imgs: Vec<&Vec<i64>> = choice.iter().map(|&i| &elems[i]).collect();
        let orders_ok = imgs.iter().zip(g.factors()).all(|(x, d)| d % g.element_order(x) == 0);
        if orders_ok {
            let map: Vec<usize> = elems
                .iter()
                .map(|e| {
                    let mut acc = vec![0; r];
                    for (c, img) in e.iter().zip(&imgs) {
                        let scaled: Vec<i64> = img.iter().map(|v| v * c).collect();
                        acc = g.add(&acc, &scaled);
                    }
                    g.index_of(&acc)
                })
                .collect();
            let distinct: BTreeSet<usize> = map.iter().copied().collect();
            if distinct.len() == elems.len() && (0..elems.len()).all(|i| qs[map[i]] == qs[i]) {
                out.push(map);
            }
        }
        // odometer over generator images
        let mut i = 0;
        loop {
            if i == r {
                return out;
            }
            choice[i] += 1;
            if choice[i] < elems.len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

pub fn compose(a: &Automorphism, b: &Automorphism) -> Automorphism {
    b.iter().map(|&i| a[i]).collect()
}

pub fn inverse(a: &Automorphism) -> Automorphism {
    let mut inv = vec![0; a.len()];
    for (i, &j) in a.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

/// Closure of a set of permutations under composition.
pub fn generated(gens: &[Automorphism], n: usize) -> BTreeSet<Automorphism> {
    let id: Automorphism = (0..n).collect();
    let mut set: BTreeSet<Automorphism> = BTreeSet::from([id.clone()]);
    let mut frontier = vec![id];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = compose(g, &x);
            if set.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    set
}

/// Order, abelianness, center size and commutator-subgroup size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupShape {
    pub order: usize,
    pub abelian: bool,
    pub center: usize,
    pub derived: usize,
}

pub fn group_shape(group: &[Automorphism]) -> GroupShape {
    let n = group.first().map_or(0, |g| g.len());
    let commute = |a: &Automorphism, b: &Automorphism| compose(a, b) == compose(b, a);
    let center = group.iter().filter(|a| group.iter().all(|b| commute(a, b))).count();
    let comms: Vec<Automorphism> = group
        .iter()
        .flat_map(|a| group.iter().map(move |b| compose(&compose(&inverse(a), &inverse(b)), &compose(a, b))))
        .collect();
    GroupShape {
        order: group.len(),
        abelian: center == group.len(),
        center,
        derived: generated(&comms, n).len(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn rank_one_lattice() {
        let g = DiscGroup::new(&ZMatrix::from_i64(&[vec![-4]]));
        assert_eq!(g.factors(), &[4]);
        assert_eq!(g.q(&[1]), QmodTwo::new(rat(-1, 4)));
        assert_eq!(g.coords(&g.lift(&[1])), Some(vec![1]));
        assert_eq!(g.coords(&[rat(1, 3)]), None);
    }

    #[test]
    fn u2_plus_minus4() {
        let g = DiscGroup::new(&ZMatrix::from_i64(&[vec![0, 2, 0], vec![2, 0, 0], vec![0, 0, -4]]));
        assert_eq!(g.factors(), &[2, 2, 4]);
        assert_eq!(g.elements().len(), 16);
        for e in g.elements() {
            assert_eq!(g.coords(&g.lift(&e)), Some(e.clone()));
        }
        let oq = enumerate_oq(&g);
        assert_eq!(group_shape(&oq), GroupShape { order: 12, abelian: false, center: 2, derived: 3 });
    }
}
