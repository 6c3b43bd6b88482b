//! Collection engine for `B(r; beta, gamma, delta)`.
//!
//! Commutators follow `[x, y] = x^-1 y^-1 x y` and conjugation is
//! `x^y = y^-1 x y`, so `s_{i-1}^s = s_{i-1} s_i` reads `[s_{i-1}, s] = s_i`.
//!
//! Generator `0` is `s`; generator `i >= 1` is `s_i`. The rewrite system is
//! the completed polycyclic presentation:
//!
//! ```text
//! s_k^s    = s_k s_{k+1}          (1 <= k <= r-1, s_r = 1)
//! s_2^s1   = s_2 s_{r-1}^{-beta}
//! s_k^s_j  = s_k                  (all other pairs j < k)
//! s^3      = s_{r-1}^delta
//! s_1^3    = s_2^-3 s_3^-1 s_{r-1}^gamma
//! s_i^3    = s_{i+1}^-3 s_{i+2}^-1  (i >= 2, s_r = s_{r+1} = 1)
//! ```
//!
//! Every tail only mentions generators of strictly higher index than the
//! generator it rewrites, which is what makes collection terminate.

use alloc::vec::Vec;

use crate::element::{GroupElement, MAX_RANK};
use crate::error::Result;
use crate::params::GroupParams;

/// Conjugation and power rules, with right-hand tails stored in normal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteSystem {
    rank: usize,
    /// `conj[j][k]` for `j < k`: the tail `t` with `s_k^{s_j} = s_k t`.
    conj: Vec<Vec<GroupElement>>,
    /// `commutes[j][k]`: the tail `conj[j][k]` is trivial.
    commutes: Vec<Vec<bool>>,
    /// `power[i]` is the normal form of `s_i^3`.
    power: Vec<GroupElement>,
}

impl RewriteSystem {
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Tail `t` of the rule `s_k^{s_j} = s_k t` (`j < k`).
    pub fn conjugate_tail(&self, j: usize, k: usize) -> &GroupElement {
        &self.conj[j][k]
    }

    /// Normal form of `s_i^3`.
    pub fn power_tail(&self, i: usize) -> &GroupElement {
        &self.power[i]
    }

    /// Whether every tail mentions only generators of higher index.
    pub fn tails_are_triangular(&self) -> bool {
        let r = self.rank;
        let above = |x: &GroupElement, i: usize| x.exponents()[..=i].iter().all(|&a| a == 0);
        (0..r).all(|i| above(&self.power[i], i))
            && (0..r).all(|j| (j + 1..r).all(|k| above(&self.conj[j][k], k)))
    }
}

/// A group in the family together with its rewrite system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    params: GroupParams,
    rules: RewriteSystem,
}

impl Group {
    /// Builds the rewrite system for `params`. Rejects `r < 5`.
    pub fn new(params: GroupParams) -> Result<Self> {
        // Revalidate in case the struct was built literally.
        let params = GroupParams::new(params.r, params.beta, params.gamma, params.delta)?;
        let r = params.r;
        let id = GroupElement::identity(r);
        let gen = |i: usize| GroupElement::generator(r, i).expect("index < r");
        let pow = |i: usize, e: u8| {
            let mut x = id;
            if !e.is_multiple_of(3) {
                x.exps_mut()[i] = e % 3;
            }
            x
        };

        let mut conj = alloc::vec![alloc::vec![id; r]; r];
        #[allow(clippy::needless_range_loop)]
        for k in 1..r - 1 {
            conj[0][k] = gen(k + 1);
        }
        conj[1][2] = pow(r - 1, (3 - params.beta) % 3);
        let commutes = conj
            .iter()
            .map(|row| row.iter().map(GroupElement::is_identity).collect())
            .collect();

        let mut group = Group {
            params,
            rules: RewriteSystem { rank: r, conj, commutes, power: alloc::vec![id; r] },
        };

        // Power tails from the top down; each one only needs rules for
        // generators above it, which are already in place.
        for i in (2..r).rev() {
            let mut p = id;
            if i + 1 < r {
                p = group.inverse(&group.rules.power[i + 1]);
            }
            if i + 2 < r {
                p = group.multiply(&p, &group.inverse(&gen(i + 2)));
            }
            group.rules.power[i] = p;
        }
        let p1 = group.multiply(
            &group.inverse(&group.rules.power[2]),
            &group.inverse(&gen(3)),
        );
        group.rules.power[1] = group.multiply(&p1, &pow(r - 1, params.gamma));
        group.rules.power[0] = pow(r - 1, params.delta);
        Ok(group)
    }

    pub fn params(&self) -> GroupParams {
        self.params
    }

    pub fn rules(&self) -> &RewriteSystem {
        &self.rules
    }

    pub fn rank(&self) -> usize {
        self.params.r
    }

    /// `|S| = 3^r`.
    pub fn order(&self) -> u64 {
        self.params.order()
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::identity(self.rank())
    }

    /// Generator `i`: `s` for `i = 0`, otherwise `s_i`. Panics if `i >= r`.
    pub fn gen(&self, i: usize) -> GroupElement {
        GroupElement::generator(self.rank(), i).expect("generator index out of range")
    }

    /// `s_i^e` as a normal form.
    pub fn gen_pow(&self, i: usize, e: i64) -> GroupElement {
        self.power(&self.gen(i), e)
    }

    /// The central generator `s_{r-1}`.
    pub fn z(&self) -> GroupElement {
        self.gen(self.rank() - 1)
    }

    pub fn element(&self, exps: &[u8]) -> Result<GroupElement> {
        GroupElement::from_exponents(self.rank(), exps)
    }

    pub fn element_at(&self, index: u64) -> GroupElement {
        GroupElement::from_index(self.rank(), index)
    }

    /// Iterates over all `3^r` normal forms in index order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order()).map(move |i| self.element_at(i))
    }

    /// Multiplies a normal form in place by the pending letters on `stack`
    /// (top of stack first), collecting from the left.
    fn collect(&self, w: &mut [u8; MAX_RANK], stack: &mut Vec<u8>) {
        let r = self.rank();
        let rules = &self.rules;
        while let Some(g) = stack.pop() {
            let g = g as usize;
            let commutes = &rules.commutes[g];
            let clean = (g + 1..r).all(|k| w[k] == 0 || commutes[k]);
            if clean {
                // Suffix commutes with g, hence with g^3.
                w[g] += 1;
                if w[g] == 3 {
                    w[g] = 0;
                    push_word(stack, &rules.power[g]);
                }
                continue;
            }
            // w = prefix * g * suffix^g, and the suffix is re-collected.
            for k in (g + 1..r).rev() {
                for _ in 0..w[k] {
                    push_word(stack, &rules.conj[g][k]);
                    stack.push(k as u8);
                }
                w[k] = 0;
            }
            w[g] += 1;
            if w[g] == 3 {
                w[g] = 0;
                push_word(stack, &rules.power[g]);
            }
        }
    }

    /// Normal form of `x * y`.
    pub fn multiply(&self, x: &GroupElement, y: &GroupElement) -> GroupElement {
        let mut out = *x;
        let mut stack = Vec::with_capacity(4 * self.rank());
        push_word(&mut stack, y);
        self.collect(out.exps_mut(), &mut stack);
        out
    }

    /// Collects an arbitrary word given as `(generator, exponent)` pairs with
    /// exponents in `0..3`, starting from the identity.
    pub fn collect_word(&self, word: &[(usize, u8)]) -> GroupElement {
        let mut out = self.identity();
        let mut stack = Vec::with_capacity(4 * self.rank());
        for &(g, e) in word.iter().rev() {
            for _ in 0..e {
                stack.push(g as u8);
            }
        }
        self.collect(out.exps_mut(), &mut stack);
        out
    }

    /// Builds `y` one generator block at a time so that `x * y` has its
    /// leading exponents cleared; `y` comes out already in normal form.
    pub fn inverse(&self, x: &GroupElement) -> GroupElement {
        let r = self.rank();
        let mut z = *x;
        let mut y = self.identity();
        let mut stack = Vec::with_capacity(4 * r);
        for i in 0..r {
            let c = z.exp(i);
            if c == 0 {
                continue;
            }
            let k = 3 - c;
            y.exps_mut()[i] = k;
            for _ in 0..k {
                stack.push(i as u8);
            }
            self.collect(z.exps_mut(), &mut stack);
        }
        debug_assert!(z.is_identity());
        y
    }

    /// `[x, y] = x^-1 y^-1 x y`.
    pub fn commutator(&self, x: &GroupElement, y: &GroupElement) -> GroupElement {
        let xy = self.multiply(x, y);
        let yx = self.multiply(y, x);
        self.multiply(&self.inverse(&yx), &xy)
    }

    /// `x^g = g^-1 x g`.
    pub fn conjugate(&self, x: &GroupElement, g: &GroupElement) -> GroupElement {
        self.multiply(&self.inverse(g), &self.multiply(x, g))
    }

    /// `x^n` for any integer `n`.
    pub fn power(&self, x: &GroupElement, n: i64) -> GroupElement {
        let base = if n < 0 { self.inverse(x) } else { *x };
        let mut e = n.unsigned_abs();
        let mut acc = self.identity();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.multiply(&acc, &sq);
            }
            e >>= 1;
            if e > 0 {
                sq = self.multiply(&sq, &sq);
            }
        }
        acc
    }

    /// `x^3` by two multiplications.
    pub fn cube(&self, x: &GroupElement) -> GroupElement {
        self.multiply(&self.multiply(x, x), x)
    }

    /// Least `n >= 1` with `x^n = 1`; always a power of 3.
    pub fn element_order(&self, x: &GroupElement) -> u64 {
        let mut n = 1;
        let mut y = *x;
        while !y.is_identity() {
            y = self.cube(&y);
            n *= 3;
        }
        n
    }

    pub fn commute(&self, x: &GroupElement, y: &GroupElement) -> bool {
        self.multiply(x, y) == self.multiply(y, x)
    }
}

/// Pushes the letters of a normal form so that they pop in left-to-right order.
fn push_word(stack: &mut Vec<u8>, w: &GroupElement) {
    let e = w.exponents();
    for k in (0..e.len()).rev() {
        for _ in 0..e[k] {
            stack.push(k as u8);
        }
    }
}
