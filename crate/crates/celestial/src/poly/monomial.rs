//! Exponent vectors and monomial orders.

use smallvec::SmallVec;
use std::cmp::Ordering;

/// Exponent vector over a fixed variable context. The arity always equals
/// the context's variable count.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub SmallVec<[u16; 8]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[idx] = 1;
        m
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn degree_in(&self, vars: &[usize]) -> u32 {
        vars.iter().map(|&i| self.0[i] as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(&a, &b)| a + b)
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(&a, &b)| a <= b)
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial(
            other
                .0
                .iter()
                .zip(self.0.iter())
                .map(|(&b, &a)| b - a)
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(&a, &b)| a == 0 || b == 0)
    }
}

/// Monomial orders. `Block` makes the flagged variables dominate: any
/// monomial containing one of them exceeds every monomial free of them,
/// which is exactly what elimination needs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    Block {
        /// `elim[i]` marks variable `i` as eliminated (compared first).
        elim: Vec<bool>,
        inner: Box<MonomialOrder>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum BlockKind {
    Lex,
    GrevLex,
}

/// An order compiled against a concrete variable count, as a sequence of
/// comparison blocks over disjoint variable lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompiledOrder {
    blocks: Vec<(BlockKind, Vec<usize>)>,
}

impl MonomialOrder {
    pub fn compile(&self, nvars: usize) -> CompiledOrder {
        let all: Vec<usize> = (0..nvars).collect();
        let mut blocks = Vec::new();
        self.compile_into(&all, &mut blocks);
        CompiledOrder { blocks }
    }

    fn compile_into(&self, vars: &[usize], out: &mut Vec<(BlockKind, Vec<usize>)>) {
        match self {
            MonomialOrder::Lex => out.push((BlockKind::Lex, vars.to_vec())),
            MonomialOrder::GrevLex => out.push((BlockKind::GrevLex, vars.to_vec())),
            MonomialOrder::Block { elim, inner } => {
                let head: Vec<usize> = vars.iter().copied().filter(|&i| elim[i]).collect();
                let tail: Vec<usize> = vars.iter().copied().filter(|&i| !elim[i]).collect();
                if !head.is_empty() {
                    out.push((BlockKind::GrevLex, head));
                }
                inner.compile_into(&tail, out);
            }
        }
    }
}

impl CompiledOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for (kind, vars) in &self.blocks {
            let ord = match kind {
                BlockKind::Lex => {
                    let mut ord = Ordering::Equal;
                    for &i in vars {
                        match a.0[i].cmp(&b.0[i]) {
                            Ordering::Equal => continue,
                            other => {
                                ord = other;
                                break;
                            }
                        }
                    }
                    ord
                }
                BlockKind::GrevLex => {
                    let da = a.degree_in(vars);
                    let db = b.degree_in(vars);
                    match da.cmp(&db) {
                        Ordering::Equal => {
                            // Tie: scan from the last variable; the smaller
                            // exponent there is the larger monomial.
                            let mut ord = Ordering::Equal;
                            for &i in vars.iter().rev() {
                                match a.0[i].cmp(&b.0[i]) {
                                    Ordering::Equal => continue,
                                    other => {
                                        ord = other.reverse();
                                        break;
                                    }
                                }
                            }
                            ord
                        }
                        other => other,
                    }
                }
            };
            if ord != Ordering::Equal {
                return ord;
            }
        }
        Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u16]) -> Monomial {
        Monomial(exps.iter().copied().collect())
    }

    #[test]
    fn lex_order() {
        let ord = MonomialOrder::Lex.compile(2);
        assert_eq!(ord.cmp(&m(&[2, 0]), &m(&[1, 5])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[1, 1]), &m(&[1, 2])), Ordering::Less);
    }

    #[test]
    fn grevlex_order() {
        let ord = MonomialOrder::GrevLex.compile(3);
        // x*y^2 vs x^2*z : degrees equal, last differing var z decides.
        assert_eq!(ord.cmp(&m(&[1, 2, 0]), &m(&[2, 0, 1])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[0, 0, 2]), &m(&[1, 0, 0])), Ordering::Greater);
    }

    #[test]
    fn block_order_dominates() {
        // Eliminate variable 0: any monomial with var 0 beats any without.
        let ord = MonomialOrder::Block {
            elim: vec![true, false],
            inner: Box::new(MonomialOrder::GrevLex),
        }
        .compile(2);
        assert_eq!(ord.cmp(&m(&[1, 0]), &m(&[0, 9])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[0, 3]), &m(&[0, 2])), Ordering::Greater);
    }
}
