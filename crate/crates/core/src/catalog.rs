//! The builtin groups used by the verification sweeps: cyclic, dihedral,
//! direct products of those, and the `Z/p ⋊ Z/q` family.

use crate::error::GroupError;
use crate::group::{is_prime, FiniteGroup};

#[derive(Clone, Debug)]
pub struct CatalogGroup {
    pub name: String,
    pub group: FiniteGroup,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Factor {
    Cyclic(usize),
    Dihedral(usize),
}

impl Factor {
    fn order(self) -> usize {
        match self {
            Factor::Cyclic(n) => n,
            Factor::Dihedral(m) => 2 * m,
        }
    }

    fn name(self) -> String {
        match self {
            Factor::Cyclic(n) => format!("C{n}"),
            Factor::Dihedral(m) => format!("D{m}"),
        }
    }

    fn build(self) -> Result<FiniteGroup, GroupError> {
        match self {
            Factor::Cyclic(n) => FiniteGroup::cyclic(n),
            Factor::Dihedral(m) => FiniteGroup::dihedral(m),
        }
    }
}

/// Chains `a1 | a2 | … | ar` with `a1 ≥ 2` and product at most `max`: each
/// abelian group once.
fn invariant_factor_chains(max: usize) -> Vec<Vec<usize>> {
    fn extend(chain: &mut Vec<usize>, product: usize, max: usize, out: &mut Vec<Vec<usize>>) {
        if chain.len() >= 2 {
            out.push(chain.clone());
        }
        let last = *chain.last().unwrap_or(&1);
        let mut next = if chain.is_empty() { 2 } else { last };
        while product * next <= max {
            if next % last == 0 {
                chain.push(next);
                extend(chain, product * next, max, out);
                chain.pop();
            }
            next += 1;
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 1, max, &mut out);
    out
}

fn product_of(factors: &[Factor]) -> Result<CatalogGroup, GroupError> {
    let mut group = factors[0].build()?;
    for f in &factors[1..] {
        group = FiniteGroup::direct_product(&group, &f.build()?)?;
    }
    let name = factors.iter().map(|f| f.name()).collect::<Vec<_>>().join("x");
    Ok(CatalogGroup { name, group })
}

/// All catalog groups of order at most `max_order`, by order and then in a
/// fixed construction order.
pub fn catalog(max_order: usize) -> Result<Vec<CatalogGroup>, GroupError> {
    let mut shapes: Vec<Vec<Factor>> = Vec::new();
    for n in 1..=max_order {
        shapes.push(vec![Factor::Cyclic(n)]);
    }
    for m in 3..=max_order / 2 {
        shapes.push(vec![Factor::Dihedral(m)]);
    }
    for chain in invariant_factor_chains(max_order) {
        shapes.push(chain.into_iter().map(Factor::Cyclic).collect());
    }
    for a in 2..=max_order {
        for m in 3..=max_order {
            // C2 x D_m with m odd is D_2m again.
            if a * 2 * m <= max_order && !(a == 2 && m % 2 == 1) {
                shapes.push(vec![Factor::Cyclic(a), Factor::Dihedral(m)]);
            }
        }
    }
    for m in 3..=max_order {
        for m2 in m..=max_order {
            if 4 * m * m2 <= max_order {
                shapes.push(vec![Factor::Dihedral(m), Factor::Dihedral(m2)]);
            }
        }
    }
    let mut out: Vec<(usize, usize, CatalogGroup)> = Vec::new();
    for (i, shape) in shapes.iter().enumerate() {
        let order: usize = shape.iter().map(|f| f.order()).product();
        out.push((order, i, product_of(shape)?));
    }
    let base = out.len();
    for (i, (p, q)) in semidirect_pairs(max_order).into_iter().enumerate() {
        let group = FiniteGroup::semidirect(p, q)?;
        out.push((p * q, base + i, CatalogGroup { name: format!("C{p}:C{q}"), group }));
    }
    out.sort_by_key(|(order, i, _)| (*order, *i));
    Ok(out.into_iter().map(|(_, _, g)| g).collect())
}

/// Pairs `(p, q)` of primes with `q` odd, `q | p − 1` and `pq ≤ max_order`.
pub fn semidirect_pairs(max_order: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for p in 2..=max_order {
        if !is_prime(p) {
            continue;
        }
        for q in (3..p).step_by(2) {
            if is_prime(q) && (p - 1) % q == 0 && p * q <= max_order {
                out.push((p, q));
            }
        }
    }
    out.sort_by_key(|&(p, q)| (p * q, p));
    out
}
