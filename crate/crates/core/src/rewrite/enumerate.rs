use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;
use rand::Rng;

use super::term::Term;

/// Closed ring-dialect terms with exactly `n` nodes, for `n = 1..=max_size`.
/// Within a size: leaves, then negations, then sums, then products, each
/// ordered by the sizes and then the order of their arguments.
pub fn closed_terms_by_size(max_size: usize) -> Vec<Vec<Term>> {
    let mut levels: Vec<Vec<Term>> = Vec::with_capacity(max_size);
    for n in 1..=max_size {
        let mut level = Vec::new();
        if n == 1 {
            level.push(Term::Zero);
            level.push(Term::One);
        } else {
            level.extend(levels[n - 2].iter().cloned().map(Term::neg));
            for build in [Term::add as fn(Term, Term) -> Term, Term::mul] {
                for left in 1..n - 1 {
                    let right = n - 1 - left;
                    for a in &levels[left - 1] {
                        for b in &levels[right - 1] {
                            level.push(build(a.clone(), b.clone()));
                        }
                    }
                }
            }
        }
        levels.push(level);
    }
    levels
}

/// Every closed ring-dialect term with at most `max_size` nodes, each once,
/// smallest first.
pub fn enumerate_closed_terms(max_size: usize) -> impl Iterator<Item = Term> {
    closed_terms_by_size(max_size).into_iter().flatten()
}

/// How many closed ring-dialect terms have exactly `n` nodes.
pub fn closed_term_count(n: usize) -> BigUint {
    let mut c: Vec<BigUint> = alloc::vec![BigUint::zero(); n + 1];
    for k in 1..=n {
        c[k] = if k == 1 {
            BigUint::from(2u8)
        } else {
            let mut pairs = BigUint::zero();
            for i in 1..k - 1 {
                pairs += &c[i] * &c[k - 1 - i];
            }
            &c[k - 1] + pairs * 2u8
        };
    }
    c[n].clone()
}

/// A random closed ring-dialect term with exactly `size` nodes.
pub fn random_closed_term<G: Rng + ?Sized>(rng: &mut G, size: usize) -> Term {
    assert!(size >= 1, "terms have at least one node");
    match size {
        1 => {
            if rng.gen_bool(0.5) {
                Term::One
            } else {
                Term::Zero
            }
        }
        2 => Term::neg(random_closed_term(rng, 1)),
        _ => match rng.gen_range(0..5) {
            0 => Term::neg(random_closed_term(rng, size - 1)),
            k => {
                let left = rng.gen_range(1..size - 1);
                let a = random_closed_term(rng, left);
                let b = random_closed_term(rng, size - 1 - left);
                if k <= 2 {
                    Term::add(a, b)
                } else {
                    Term::mul(a, b)
                }
            }
        },
    }
}
