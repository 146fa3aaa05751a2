//! The family `G = Z/p ⋊ H0` with `S = G \ (H ∪ Ha ∪ a⁻¹H ∪ a⁻¹Ha)`, in
//! which only the third case of the structure theorem holds.

use crate::error::{ExampleError, GroupError};
use crate::group::{is_prime, FiniteGroup, DEFAULT_MAX_ORDER};
use crate::report::{Check, KvReport, Relation};
use crate::subset::GroupSubset;
use crate::sumset::{inverse_set, left_translate, product_set, right_translate};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExampleInstance {
    pub p: usize,
    pub q: usize,
    pub group: FiniteGroup,
    /// `{0} × H0`.
    pub h: GroupSubset,
    /// `(1, 1)`.
    pub a: usize,
    /// `H ∪ Ha`.
    pub a_set: GroupSubset,
    /// `H ∪ Ha ∪ a⁻¹H ∪ a⁻¹Ha`.
    pub b_set: GroupSubset,
    /// `G \ B`.
    pub s: GroupSubset,
}

pub fn build_example(p: usize, q: usize) -> Result<ExampleInstance, ExampleError> {
    build_example_capped(p, q, DEFAULT_MAX_ORDER)
}

pub fn build_example_capped(p: usize, q: usize, cap: usize) -> Result<ExampleInstance, ExampleError> {
    let g = FiniteGroup::semidirect_capped(p, q, cap)?;
    let n = g.order();
    // (x, h) has index x*q + rank(h); H0 ascending puts h = 1 first.
    let h = GroupSubset::from_elements(n, 0..q)?;
    let a = q;
    let a_inv = g.inv(a);
    let ha = right_translate(&g, &h, a);
    let a_set = h.union(&ha);
    let b_set = a_set
        .union(&left_translate(&g, a_inv, &h))
        .union(&left_translate(&g, a_inv, &ha));
    let s = b_set.complement();
    let inst = ExampleInstance {
        p,
        q,
        group: g,
        h,
        a,
        a_set,
        b_set,
        s,
    };
    inst.check_invariants()?;
    Ok(inst)
}

impl ExampleInstance {
    fn check_invariants(&self) -> Result<(), ExampleError> {
        let g = &self.group;
        let (n, hq) = (g.order(), self.h.len());
        let fail = |m: &str| Err(ExampleError::Invariant(m.to_string()));
        if !g.is_subgroup(&self.h) || hq != self.q {
            return fail("H is not a subgroup of order q");
        }
        if self.a_set.len() != 2 * hq {
            return fail("|A| != 2|H|");
        }
        if self.b_set.len() + 1 != 4 * hq {
            return fail("|B| != 4|H| - 1");
        }
        if self.s.len() + 4 * hq != n + 1 {
            return fail("|S| != |G| - 4|H| + 1");
        }
        if inverse_set(g, &self.s) != self.s {
            return fail("S != S^-1");
        }
        Ok(())
    }

    /// `K_x = (x,1)⁻¹ H (x,1)`.
    pub fn conjugate_subgroup(&self, x: usize) -> GroupSubset {
        let g = &self.group;
        let e = x * self.q;
        left_translate(g, g.inv(e), &right_translate(g, &self.h, e))
    }

    /// The order-`p` subgroup `{(x, 1)}`.
    pub fn normal_subgroup(&self) -> GroupSubset {
        GroupSubset::from_elements(self.group.order(), (0..self.p).map(|x| x * self.q)).expect("in range")
    }
}

/// One numbered claim and the (in)equalities that establish it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExampleCheck {
    pub id: usize,
    pub title: &'static str,
    pub checks: Vec<Check>,
}

impl ExampleCheck {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExampleVerdict {
    pub p: usize,
    pub q: usize,
    pub items: Vec<ExampleCheck>,
}

impl ExampleVerdict {
    pub fn passed(&self) -> usize {
        self.items.iter().filter(|i| i.pass()).count()
    }

    pub fn pass(&self) -> bool {
        self.passed() == self.items.len()
    }

    pub fn checks(&self) -> impl Iterator<Item = &Check> {
        self.items.iter().flat_map(|i| i.checks.iter())
    }
}

fn prod(g: &FiniteGroup, x: &GroupSubset, y: &GroupSubset) -> GroupSubset {
    product_set(g, x, y).expect("same group")
}

/// Evaluates the eight claims about the instance, each by direct computation.
/// The claims are evaluated on the stored sets, so a perturbed `S` shows up
/// as failures.
pub fn verify_example(inst: &ExampleInstance) -> ExampleVerdict {
    let g = &inst.group;
    let n = g.order();
    let (h, s, a_set, b_set) = (&inst.h, &inst.s, &inst.a_set, &inst.b_set);
    let a_inv = g.inv(inst.a);
    let ha = right_translate(g, h, inst.a);
    let a_inv_h = left_translate(g, a_inv, h);
    let a_inv_ha = left_translate(g, a_inv, &ha);
    let (sl, hl, al) = (s.len(), h.len(), a_set.len());
    let mut items = Vec::new();

    let lhs = h.union(&ha).intersection(&a_inv_h.union(&a_inv_ha));
    items.push(ExampleCheck {
        id: 1,
        title: "(H ∪ Ha) ∩ (a⁻¹H ∪ a⁻¹Ha) = {1}",
        checks: vec![Check::sets("c1.cap", &lhs, Relation::Eq, &g.trivial_subgroup())],
    });

    let as_ = prod(g, a_set, s);
    items.push(ExampleCheck {
        id: 2,
        title: "AS = G \\ A and |AS| = |S| + |A| - 1",
        checks: vec![
            Check::sets("c2.AS", &as_, Relation::Eq, &a_set.complement()),
            Check::size("c2.|AS|", as_.len(), Relation::Eq, sl + al - 1),
            Check::size("c2.|G|-|A|", n - al, Relation::Eq, sl + al - 1),
            Check::size("c2.|S|", sl + 4 * hl, Relation::Eq, n + 1),
        ],
    });

    let hs = prod(g, h, s);
    items.push(ExampleCheck {
        id: 3,
        title: "|HS| = |S| + 2|H| - 1",
        checks: vec![Check::size("c3.|HS|", hs.len(), Relation::Eq, sl + 2 * hl - 1)],
    });

    items.push(ExampleCheck {
        id: 4,
        title: "B = B⁻¹ and S = S⁻¹",
        checks: vec![
            Check::sets("c4.B", &inverse_set(g, b_set), Relation::Eq, b_set),
            Check::sets("c4.S", &inverse_set(g, s), Relation::Eq, s),
        ],
    });

    let subgroups = g.subgroups();
    let order_p: Vec<&GroupSubset> = subgroups.iter().filter(|x| x.len() == inst.p).collect();
    let mut c5 = vec![Check::size("c5.#order-p", order_p.len(), Relation::Eq, 1)];
    for gp in &order_p {
        c5.push(Check::size("c5.|GpS|", prod(g, gp, s).len(), Relation::Eq, n));
    }
    items.push(ExampleCheck {
        id: 5,
        title: "G_p S = G",
        checks: c5,
    });

    let order_q: Vec<&GroupSubset> = subgroups.iter().filter(|x| x.len() == inst.q).collect();
    let mut c6 = vec![Check::size("c6.#order-q", order_q.len(), Relation::Eq, inst.p)];
    for x in 0..inst.p {
        let kx = inst.conjugate_subgroup(x);
        c6.push(Check::flag(format!("c6.K{x}.listed"), order_q.contains(&&kx), true));
        let kxs = prod(g, &kx, s);
        match x {
            0 => c6.push(Check::sets("c6.K0", &kx, Relation::Eq, h)),
            1 => {
                c6.push(Check::sets("c6.K1", &kx, Relation::Eq, &a_inv_ha));
                c6.push(Check::size("c6.|K1S|", kxs.len(), Relation::Eq, sl + 2 * kx.len() - 1));
            }
            _ => c6.push(Check::size(format!("c6.|K{x}S|"), kxs.len(), Relation::Eq, n)),
        }
    }
    items.push(ExampleCheck {
        id: 6,
        title: "K_x S = G for x ≠ 0, 1 and |K_1 S| = |S| + 2|K_1| - 1",
        checks: c6,
    });

    // |{1,r}S| = |S| + 1 iff |{1,r}B| = |B| + 1; both are evaluated.
    let (mut min_s, mut min_b, mut agree) = (usize::MAX, usize::MAX, true);
    for r in 1..n {
        let grow_s = s.union(&left_translate(g, r, s)).len() - sl;
        let grow_b = b_set.union(&left_translate(g, r, b_set)).len() - b_set.len();
        agree &= (grow_s == 1) == (grow_b == 1);
        min_s = min_s.min(grow_s);
        min_b = min_b.min(grow_b);
    }
    items.push(ExampleCheck {
        id: 7,
        title: "no r ≠ 1 with |{1,r}S| = |S| + 1",
        checks: vec![
            Check::size("c7.min|{1,r}B|-|B|", min_b, Relation::Ge, 2),
            Check::size("c7.min|{1,r}S|-|S|", min_s, Relation::Ge, 2),
            Check::flag("c7.formulations-agree", agree, true),
        ],
    });

    let hah = g.double_coset_size(h, inst.a).unwrap_or(0);
    items.push(ExampleCheck {
        id: 8,
        title: "|HaH| = |H|²",
        checks: vec![Check::size("c8.|HaH|", hah, Relation::Eq, hl * hl)],
    });

    ExampleVerdict {
        p: inst.p,
        q: inst.q,
        items,
    }
}

pub fn verdict_kv(v: &ExampleVerdict) -> KvReport {
    let mut kv = KvReport::new();
    kv.push("p", v.p).push("q", v.q).push("passed", format!("{}/{}", v.passed(), v.items.len()));
    for item in &v.items {
        kv.push(format!("check.{}", item.id), if item.pass() { "pass" } else { "fail" });
        kv.push(format!("check.{}.title", item.id), item.title);
        kv.push_checks(&format!("check.{}.line", item.id), &item.checks);
    }
    kv
}

/// One row of the scan over `p = 2q + 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct GermainRow {
    pub p: usize,
    pub q: usize,
    pub order: usize,
    pub s_len: usize,
    /// `(|G| - |S|) / √|G|`.
    pub ratio: f64,
}

/// All `p <= limit` with `q = (p - 1)/2` an odd prime and `p` prime.
pub fn sophie_germain_scan(limit: usize) -> Result<Vec<GermainRow>, GroupError> {
    if limit > DEFAULT_MAX_ORDER {
        return Err(GroupError::TooLarge {
            order: limit,
            cap: DEFAULT_MAX_ORDER,
        });
    }
    Ok((7..=limit)
        .filter(|&p| is_prime(p) && (p - 1) % 2 == 0)
        .map(|p| (p, (p - 1) / 2))
        .filter(|&(_, q)| q % 2 == 1 && is_prime(q))
        .map(|(p, q)| {
            let order = p * q;
            let s_len = order + 1 - 4 * q;
            GermainRow {
                p,
                q,
                order,
                s_len,
                ratio: (order - s_len) as f64 / (order as f64).sqrt(),
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let e = build_example(7, 3).unwrap();
        assert_eq!(
            (e.group.order(), e.h.len(), e.a_set.len(), e.b_set.len(), e.s.len()),
            (21, 3, 6, 11, 10)
        );
        let e = build_example(11, 5).unwrap();
        assert_eq!((e.group.order(), e.s.len()), (55, 36));
        assert!(build_example(5, 3).is_err());
    }

    #[test]
    fn all_checks_pass_at_55() {
        let v = verify_example(&build_example(11, 5).unwrap());
        assert_eq!(v.passed(), 8, "{:?}", v.checks().filter(|c| !c.pass).collect::<Vec<_>>());
    }

    #[test]
    fn conjugates_do_not_all_cover_at_21() {
        // K_2 S and K_6 S miss three elements each at p = 7.
        let v = verify_example(&build_example(7, 3).unwrap());
        let failed: Vec<&str> = v.checks().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
        assert_eq!(failed, vec!["c6.|K2S|", "c6.|K6S|"]);
        assert_eq!(v.passed(), 7);
    }

    #[test]
    fn perturbation_is_caught() {
        let mut e = build_example(7, 3).unwrap();
        let extra = e.b_set.iter().find(|&x| x != 0).unwrap();
        e.s.insert(extra);
        let v = verify_example(&e);
        assert!(!v.items[1].pass() || !v.items[6].pass());
    }

    #[test]
    fn deterministic() {
        assert_eq!(build_example(11, 5).unwrap(), build_example(11, 5).unwrap());
    }

    #[test]
    fn germain_scan() {
        let rows = sophie_germain_scan(25).unwrap();
        let pairs: Vec<(usize, usize)> = rows.iter().map(|r| (r.p, r.q)).collect();
        assert_eq!(pairs, vec![(7, 3), (11, 5), (23, 11)]);
        assert!(sophie_germain_scan(6).unwrap().is_empty());
        let last = rows.last().unwrap();
        assert_eq!((last.order, last.s_len), (253, 210));
        assert!((last.ratio - 43.0 / 253f64.sqrt()).abs() < 1e-12);
        assert!(last.ratio < 2.0 * 2f64.sqrt());
    }
}
