//! Plain exhaustive enumeration of every `X ∋ 1`, used to certify the
//! branch-and-bound search.

use crate::error::SumsetError;
use crate::group::FiniteGroup;
use crate::subset::GroupSubset;
use crate::sumset::{check_isoperimetric_input, FragmentReport};

/// Largest group order the oracle accepts by default (`2^(n-1)` sets).
pub const DEFAULT_ORACLE_CAP: usize = 20;

/// The table of products has `2^(n-1)` entries; beyond this it stops being
/// a desk-scale computation.
const ORACLE_HARD_LIMIT: usize = 24;

pub fn oracle_atoms(g: &FiniteGroup, s: &GroupSubset, k: usize) -> Result<FragmentReport, SumsetError> {
    oracle_atoms_capped(g, s, k, DEFAULT_ORACLE_CAP, crate::sumset::DEFAULT_ATOM_CAP)
}

pub fn oracle_atoms_capped(
    g: &FiniteGroup,
    s: &GroupSubset,
    k: usize,
    oracle_cap: usize,
    atom_cap: usize,
) -> Result<FragmentReport, SumsetError> {
    let n = g.order();
    if n > oracle_cap.min(ORACLE_HARD_LIMIT) {
        return Err(SumsetError::OracleCapExceeded {
            order: n,
            cap: oracle_cap.min(ORACLE_HARD_LIMIT),
        });
    }
    check_isoperimetric_input(g, s, k)?;
    // rows[x] = xS as a mask; products read straight from the table.
    let rows: Vec<u32> = (0..n)
        .map(|x| s.iter().fold(0u32, |m, t| m | 1 << g.mul(x, t)))
        .collect();
    let full: u32 = (1u32 << n) - 1;
    // Sets containing the identity: bit 0 plus any subset of 1..n.
    let rest = n - 1;
    let mut prod = vec![0u32; 1usize << rest];
    let mut best: Option<(usize, usize)> = None;
    let mut atoms: Vec<u32> = Vec::new();
    let mut fragments = 0u64;
    prod[0] = rows[0];
    for m in 0..(1usize << rest) {
        if m > 0 {
            let top = usize::BITS as usize - 1 - m.leading_zeros() as usize;
            prod[m] = prod[m & !(1 << top)] | rows[top + 1];
        }
        let x = ((m as u32) << 1) | 1;
        let size = x.count_ones() as usize;
        let star = (full & !prod[m] & !x).count_ones() as usize;
        if size < k || star < k {
            continue;
        }
        let f = size + star;
        match best {
            Some((bf, ba)) if f < bf || (f == bf && size > ba) => {}
            Some((bf, ba)) if f == bf && size == ba => atoms.push(x),
            _ => {
                best = Some((f, size));
                atoms.clear();
                atoms.push(x);
            }
        }
    }
    let (f, alpha) = best.ok_or(SumsetError::NotSeparable { k })?;
    // Second pass for the fragment count.
    for (m, &xs) in prod.iter().enumerate() {
        let x = ((m as u32) << 1) | 1;
        let size = x.count_ones() as usize;
        let star = (full & !xs & !x).count_ones() as usize;
        if size >= k && star >= k && size + star == f {
            fragments += 1;
        }
    }
    let mut sets: Vec<GroupSubset> = atoms
        .iter()
        .map(|&x| GroupSubset::from_elements(n, (0..n).filter(|&i| x >> i & 1 == 1)).expect("in range"))
        .collect();
    sets.sort();
    let truncated = sets.len() > atom_cap;
    sets.truncate(atom_cap);
    Ok(FragmentReport {
        k,
        separable: true,
        kappa: n - f,
        alpha,
        atoms: sets,
        atoms_truncated: truncated,
        fragment_count: fragments,
        fragment_count_exact: true,
        oracle_used: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_seven() {
        let g = FiniteGroup::cyclic(7).unwrap();
        let s = g.subset([0, 1, 2]).unwrap();
        let r = oracle_atoms(&g, &s, 2).unwrap();
        assert_eq!((r.kappa, r.alpha), (2, 2));
        // {0,1} and its translate {6,0}
        assert_eq!(r.atoms, vec![g.subset([0, 1]).unwrap(), g.subset([0, 6]).unwrap()]);
        let s = g.subset([0, 1, 3]).unwrap();
        assert_eq!(oracle_atoms(&g, &s, 2).unwrap().kappa, 3);
    }

    #[test]
    fn subgroup_atom() {
        let g = FiniteGroup::cyclic(6).unwrap();
        let s = g.subset([0, 2, 3]).unwrap();
        let r = oracle_atoms(&g, &s, 2).unwrap();
        assert_eq!(r.kappa, 2);
        assert_eq!(r.atoms, vec![g.subset([0, 3]).unwrap()]);
    }

    #[test]
    fn whole_group_is_not_separable() {
        let g = FiniteGroup::cyclic(2).unwrap();
        let s = g.whole();
        assert_eq!(oracle_atoms(&g, &s, 1), Err(SumsetError::NotSeparable { k: 1 }));
    }

    #[test]
    fn cap_enforced() {
        let g = FiniteGroup::cyclic(21).unwrap();
        let s = g.subset([0, 1]).unwrap();
        assert!(matches!(
            oracle_atoms(&g, &s, 1),
            Err(SumsetError::OracleCapExceeded { order: 21, .. })
        ));
    }
}
