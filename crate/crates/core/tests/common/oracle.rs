//! Brute-force reference for Lie algebra cohomology over ℚ.
//!
//! Shares nothing with the library beyond reading structure constants:
//! forms are evaluated through permutation-expansion determinants, the
//! coboundary is the textbook alternating sum, and rank is a plain
//! Gauss-Jordan over `BigRational`.

#![allow(dead_code, clippy::needless_range_loop)]

use liecohom::LieAlgebra;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

/// Dense structure constants `c[i][j][k]`, 0-based.
pub struct Constants {
    pub n: usize,
    pub c: Vec<Vec<Vec<Q>>>,
}

impl Constants {
    pub fn of(alg: &LieAlgebra) -> Self {
        let n = alg.dim();
        let c = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        alg.basis_bracket(i, j)
                            .iter()
                            .map(|x| x.as_rational().expect("oracle runs over Q").clone())
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Constants { n, c }
    }

    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.n];
        for i in 0..self.n {
            for j in 0..self.n {
                let w = &x[i] * &y[j];
                if w.is_zero() {
                    continue;
                }
                for k in 0..self.n {
                    out[k] += &w * &self.c[i][j][k];
                }
            }
        }
        out
    }

    fn unit(&self, i: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.n];
        v[i] = Q::one();
        v
    }

    /// Triples `(i, j, k)` whose Jacobiator is nonzero.
    pub fn jacobi_failures(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                for k in 0..self.n {
                    let (a, b, c) = (self.unit(i), self.unit(j), self.unit(k));
                    let t1 = self.bracket(&self.bracket(&a, &b), &c);
                    let t2 = self.bracket(&self.bracket(&b, &c), &a);
                    let t3 = self.bracket(&self.bracket(&c, &a), &b);
                    if (0..self.n).any(|m| !(&t1[m] + &t2[m] + &t3[m]).is_zero()) {
                        out.push((i, j, k));
                    }
                }
            }
        }
        out
    }
}

pub fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// All increasing `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

fn permutations(k: usize) -> Vec<(Vec<usize>, bool)> {
    if k == 0 {
        return vec![(Vec::new(), true)];
    }
    let mut out = Vec::new();
    for (p, even) in permutations(k - 1) {
        // Insert k-1 at each position; moving it left past s entries flips parity s times.
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            let shifts = p.len() - pos;
            out.push((q, even == (shifts % 2 == 0)));
        }
    }
    out
}

/// `det(m)` by summing over all permutations.
pub fn leibniz_det(m: &[Vec<Q>]) -> Q {
    let k = m.len();
    let mut total = Q::zero();
    for (p, even) in permutations(k) {
        let mut term = Q::one();
        for (r, &c) in p.iter().enumerate() {
            term *= &m[r][c];
            if term.is_zero() {
                break;
            }
        }
        if even {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// `θ^I(v_1, …, v_k) = det[v_r[I_s]]`.
pub fn eval_basis_form(indices: &[usize], args: &[Vec<Q>]) -> Q {
    let m: Vec<Vec<Q>> = args.iter().map(|v| indices.iter().map(|&i| v[i].clone()).collect()).collect();
    leibniz_det(&m)
}

/// Matrix of `d: Λ^k → Λ^{k+1}`, rows indexed by `(k+1)`-subsets.
pub fn coboundary(cs: &Constants, k: usize) -> Vec<Vec<Q>> {
    let n = cs.n;
    let sources = subsets(n, k);
    let targets = subsets(n, k + 1);
    targets
        .iter()
        .map(|j| {
            let z: Vec<Vec<Q>> = j.iter().map(|&i| cs.unit(i)).collect();
            sources
                .iter()
                .map(|src| {
                    let mut acc = Q::zero();
                    for p in 0..z.len() {
                        for q in p + 1..z.len() {
                            let mut args = vec![cs.bracket(&z[p], &z[q])];
                            args.extend(z.iter().enumerate().filter(|(s, _)| *s != p && *s != q).map(|(_, v)| v.clone()));
                            let val = eval_basis_form(src, &args);
                            if (p + q) % 2 == 0 {
                                acc += val;
                            } else {
                                acc -= val;
                            }
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

pub fn gauss_rank(mut m: Vec<Vec<Q>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for x in m[rank].iter_mut() {
            *x /= &pivot;
        }
        for r in 0..rows {
            if r != rank && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for cc in 0..cols {
                    let sub = &f * &m[rank][cc];
                    m[r][cc] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn matmul(a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|c| (0..inner).fold(Q::zero(), |acc, t| acc + &row[t] * &b[t][c]))
                .collect()
        })
        .collect()
}

pub fn is_zero_matrix(m: &[Vec<Q>]) -> bool {
    m.iter().all(|r| r.iter().all(|x| x.is_zero()))
}

pub fn betti(alg: &LieAlgebra) -> Vec<usize> {
    let cs = Constants::of(alg);
    let n = cs.n;
    let ranks: Vec<usize> = (0..=n).map(|k| if k == n { 0 } else { gauss_rank(coboundary(&cs, k)) }).collect();
    (0..=n)
        .map(|k| binom(n, k) - ranks[k] - if k == 0 { 0 } else { ranks[k - 1] })
        .collect()
}
