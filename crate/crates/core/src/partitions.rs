//! Integer partitions, multipartitions, and the q-Pochhammer factors of Hua's formula.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::poly::Poly;
use crate::quiver::{DimVector, Quiver};
use crate::ratfunc::RationalFunction;

/// Weakly decreasing list of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Sorts `parts` decreasingly and drops zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The `j`-th part, 1-based, zero past the end.
    pub fn part(&self, j: usize) -> u32 {
        j.checked_sub(1).and_then(|i| self.0.get(i)).copied().unwrap_or(0)
    }

    /// Differences `μⱼ − μⱼ₊₁` for `j = 1..=len`.
    pub fn differences(&self) -> impl Iterator<Item = u32> + '_ {
        (1..=self.0.len()).map(move |j| self.part(j) - self.part(j + 1))
    }
}

/// All partitions of `n` in reverse lexicographic order, e.g. `4, 31, 22, 211, 1111`.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    fill(n, n, &mut stack, &mut out);
    out
}

fn fill(rest: u32, max: u32, stack: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(stack.clone()));
        return;
    }
    for first in (1..=rest.min(max)).rev() {
        stack.push(first);
        fill(rest - first, first, stack, out);
        stack.pop();
    }
}

/// One partition per vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiPartition(Vec<Partition>);

impl MultiPartition {
    pub fn new(parts: Vec<Partition>) -> Self {
        MultiPartition(parts)
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    /// `|λ| = (|λⁱ|)ᵢ`.
    pub fn weight(&self) -> DimVector {
        DimVector::new(self.0.iter().map(Partition::weight).collect())
    }

    /// The vectors `λⱼ = (λⱼⁱ)ᵢ` of `j`-th parts, for `j = 1` up to the longest part list.
    pub fn rows(&self) -> Vec<DimVector> {
        let depth = self.0.iter().map(|p| p.parts().len()).max().unwrap_or(0);
        (1..=depth).map(|j| DimVector::new(self.0.iter().map(|p| p.part(j)).collect())).collect()
    }
}

/// Every multipartition of weight `α`, as the product of the per-vertex enumerations
/// (last vertex varies fastest).
pub fn enumerate_multipartitions(alpha: &DimVector) -> Vec<MultiPartition> {
    let mut out = vec![Vec::new()];
    for &a in alpha.entries() {
        let choices = enumerate_partitions(a);
        let mut next = Vec::with_capacity(out.len() * choices.len());
        for prefix in &out {
            for p in &choices {
                let mut v: Vec<Partition> = prefix.clone();
                v.push(p.clone());
                next.push(v);
            }
        }
        out = next;
    }
    out.into_iter().map(MultiPartition).collect()
}

/// `φₙ(q) = (1−q)(1−q²)⋯(1−qⁿ)`.
pub fn phi_n(n: u32) -> Poly {
    (1..=n as usize).fold(Poly::one(), |acc, m| &acc * &(&Poly::one() - &Poly::monomial(BigInt::one(), m)))
}

/// `φ_μ(q) = Πⱼ φ_{μⱼ−μⱼ₊₁}(q)`, or the same product evaluated at `q⁻¹`.
pub fn phi_partition(mu: &Partition, at_inverse: bool) -> RationalFunction {
    let mut num = Poly::one();
    let mut shift = 0usize;
    for d in mu.differences() {
        for m in 1..=d as usize {
            if at_inverse {
                // 1 − q^{−m} = (q^m − 1)/q^m
                num = &num * &(&Poly::monomial(BigInt::one(), m) - &Poly::one());
                shift += m;
            } else {
                num = &num * &(&Poly::one() - &Poly::monomial(BigInt::one(), m));
            }
        }
    }
    RationalFunction::new(num, Poly::monomial(BigInt::one(), shift)).expect("monomial denominator")
}

/// `T(λ) = Σⱼ T(λⱼ)` summed over the rows of `λ`.
pub fn tits_statistic(quiver: &Quiver, lambda: &MultiPartition) -> i64 {
    assert_eq!(lambda.components().len(), quiver.vertex_count(), "multipartition must have one component per vertex");
    lambda.rows().iter().map(|row| quiver.tits_unchecked(row.entries())).sum()
}
