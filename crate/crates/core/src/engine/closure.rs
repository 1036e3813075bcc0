//! Brute-force subgroup machinery: breadth-first closure under
//! multiplication, inversion and conjugation, plus the lower central
//! series, the Lazard series and the center computed from generator
//! recursions. These enumerations are the independent oracle for the
//! closed-form order formulas.

use rustc_hash::FxHashSet;
use std::sync::Arc;

use super::group::{GroupContext, GroupElement};
use super::EngineError;
use crate::invariants::PrimePowerOrder;

/// A finite subgroup given by its element set and the (normal) generating
/// set it was closed from. Closed under multiplication and inversion;
/// contains the identity; its size is a power of p (Lagrange in a p-group),
/// which is asserted on construction.
pub struct SubgroupSet {
    ctx: Arc<GroupContext>,
    elements: Vec<Vec<u32>>,
    index: FxHashSet<Vec<u32>>,
    generators: Vec<GroupElement>,
}

impl std::fmt::Debug for SubgroupSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SubgroupSet")
            .field("len", &self.elements.len())
            .field("generators", &self.generators.len())
            .finish()
    }
}

impl SubgroupSet {
    fn from_parts(
        ctx: Arc<GroupContext>,
        elements: Vec<Vec<u32>>,
        generators: Vec<GroupElement>,
    ) -> Self {
        let index: FxHashSet<Vec<u32>> = elements.iter().cloned().collect();
        debug_assert_eq!(index.len(), elements.len());
        let set = SubgroupSet {
            ctx,
            elements,
            index,
            generators,
        };
        set.assert_lagrange();
        set
    }

    /// |S| must be p^e with e at most the group order exponent.
    fn assert_lagrange(&self) {
        let p = self.ctx.p() as u128;
        let mut size = self.elements.len() as u128;
        let mut e = 0u64;
        while size.is_multiple_of(p) {
            size /= p;
            e += 1;
        }
        assert!(
            size == 1 && e <= self.ctx.order_exponent(),
            "subgroup size {} violates Lagrange in a group of order {}^{}",
            self.elements.len(),
            self.ctx.p(),
            self.ctx.order_exponent()
        );
    }

    pub fn context(&self) -> &Arc<GroupContext> {
        &self.ctx
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn order(&self) -> PrimePowerOrder {
        let p = self.ctx.p();
        let mut size = self.elements.len() as u128;
        let mut e = 0u64;
        while size > 1 {
            size /= p as u128;
            e += 1;
        }
        PrimePowerOrder {
            prime: p,
            exponent: e.into(),
        }
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.index.contains(g.coords())
    }

    pub fn contains_coords(&self, coords: &[u32]) -> bool {
        self.index.contains(coords)
    }

    /// Elements in deterministic discovery order.
    pub fn iter(&self) -> impl Iterator<Item = GroupElement> + '_ {
        self.elements
            .iter()
            .map(|c| GroupElement::from_coords(&self.ctx, c.clone()).expect("stored coords valid"))
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn set_eq(&self, other: &SubgroupSet) -> bool {
        self.elements.len() == other.elements.len()
            && self.elements.iter().all(|c| other.index.contains(c))
    }

    pub fn is_subset_of(&self, other: &SubgroupSet) -> bool {
        self.elements.iter().all(|c| other.index.contains(c))
    }

    /// Intersection as a plain element set (any intersection of subgroups
    /// is a subgroup).
    pub fn intersection(&self, other: &SubgroupSet) -> SubgroupSet {
        let elements: Vec<Vec<u32>> = self
            .elements
            .iter()
            .filter(|c| other.index.contains(*c))
            .cloned()
            .collect();
        SubgroupSet::from_parts(Arc::clone(&self.ctx), elements, Vec::new())
    }

    /// Debug dump: sorted coordinate vectors as decimal strings, for
    /// diffing against other implementations.
    pub fn to_debug_json(&self) -> String {
        let mut sorted = self.elements.clone();
        sorted.sort();
        let rows: Vec<Vec<String>> = sorted
            .iter()
            .map(|c| c.iter().map(|v| v.to_string()).collect())
            .collect();
        serde_json::to_string(&rows).expect("serializing strings cannot fail")
    }
}

/// Smallest set containing `gens` that is closed under multiplication and
/// inversion, and under conjugation by every element of `conjugators`.
/// Deterministic: the BFS queue is seeded in generator order and new
/// conjugates are appended in scan order. Fails with the partial size once
/// more than `cap` elements appear.
pub fn subgroup_closure(
    ctx: &Arc<GroupContext>,
    gens: &[GroupElement],
    conjugators: &[GroupElement],
    cap: usize,
) -> Result<SubgroupSet, EngineError> {
    for g in gens.iter().chain(conjugators) {
        if !g.context().same_group(ctx) {
            return Err(EngineError::ContextMismatch);
        }
    }
    let law = ctx.law()?;
    let b = ctx.basis_len();

    let mut gen_coords: Vec<Vec<u32>> = Vec::new();
    let mut seen_gens: FxHashSet<Vec<u32>> = FxHashSet::default();
    for g in gens {
        if g.is_identity() || !seen_gens.insert(g.coords().to_vec()) {
            continue;
        }
        gen_coords.push(g.coords().to_vec());
    }

    let inv = |coords: &[u32]| -> Vec<u32> {
        coords
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                if v == 0 {
                    0
                } else {
                    (ctx.modulus(i) - v as u64) as u32
                }
            })
            .collect()
    };

    let mut moves: Vec<Vec<u32>> = Vec::new();
    let push_move = |moves: &mut Vec<Vec<u32>>, m: Vec<u32>| {
        let m_inv = inv(&m);
        if !moves.contains(&m) {
            moves.push(m);
        }
        if !moves.contains(&m_inv) {
            moves.push(m_inv);
        }
    };
    for g in &gen_coords {
        push_move(&mut moves, g.clone());
    }

    let identity = vec![0u32; b];
    let mut elements = vec![identity.clone()];
    let mut index: FxHashSet<Vec<u32>> = FxHashSet::default();
    index.insert(identity);
    // applied[i] = number of moves already multiplied into element i
    let mut applied: Vec<u32> = vec![0];
    let mut scratch = vec![0u32; b];

    loop {
        // close under right multiplication by every move
        let mut qi = 0;
        while qi < elements.len() {
            let start = applied[qi] as usize;
            if start < moves.len() {
                let g = elements[qi].clone();
                for m in &moves[start..] {
                    law.eval(&g, m, &mut scratch);
                    if !index.contains(scratch.as_slice()) {
                        if elements.len() >= cap {
                            return Err(EngineError::CapExceeded {
                                size: elements.len() + 1,
                            });
                        }
                        index.insert(scratch.clone());
                        elements.push(scratch.clone());
                        applied.push(0);
                    }
                }
                applied[qi] = moves.len() as u32;
            }
            qi += 1;
        }

        if conjugators.is_empty() {
            break;
        }
        // add conjugates of the generating set that fall outside
        let mut added = false;
        let snapshot = gen_coords.len();
        for gi in 0..snapshot {
            for k in conjugators {
                let k_inv = inv(k.coords());
                law.eval(&k_inv, &gen_coords[gi], &mut scratch);
                let half = scratch.clone();
                law.eval(&half, k.coords(), &mut scratch);
                if !index.contains(scratch.as_slice()) && !gen_coords.contains(&scratch) {
                    gen_coords.push(scratch.clone());
                    push_move(&mut moves, scratch.clone());
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }

    let generators = gen_coords
        .into_iter()
        .map(|c| GroupElement::from_coords(ctx, c).expect("generator coords valid"))
        .collect();
    Ok(SubgroupSet::from_parts(
        Arc::clone(ctx),
        elements,
        generators,
    ))
}

pub fn group_generators(ctx: &Arc<GroupContext>) -> Vec<GroupElement> {
    (0..ctx.d())
        .map(|i| GroupElement::generator(ctx, i).expect("i < d"))
        .collect()
}

/// The whole group as a subgroup set.
pub fn full_group(ctx: &Arc<GroupContext>, cap: usize) -> Result<SubgroupSet, EngineError> {
    subgroup_closure(ctx, &group_generators(ctx), &[], cap)
}

fn dedup_nontrivial(gens: Vec<GroupElement>) -> Vec<GroupElement> {
    let mut seen: FxHashSet<Vec<u32>> = FxHashSet::default();
    gens.into_iter()
        .filter(|g| !g.is_identity() && seen.insert(g.coords().to_vec()))
        .collect()
}

/// Normal generating set for γ_i(G): generators for i = 1, otherwise
/// commutators of the previous term's generating set with the group
/// generators.
pub fn gamma_generators(ctx: &Arc<GroupContext>, i: u64) -> Result<Vec<GroupElement>, EngineError> {
    assert!(i >= 1);
    let mut gens = group_generators(ctx);
    for _ in 1..i {
        let mut next = Vec::new();
        for s in &gens {
            for x in group_generators(ctx) {
                next.push(s.commutator(&x)?);
            }
        }
        gens = dedup_nontrivial(next);
        if gens.is_empty() {
            break;
        }
    }
    Ok(gens)
}

/// Normal generating set for λ_j(G) via λ_j = [λ_{j-1}, G] λ_{j-1}^p:
/// commutators with the group generators together with p-th powers.
pub fn lambda_generators(
    ctx: &Arc<GroupContext>,
    j: u64,
) -> Result<Vec<GroupElement>, EngineError> {
    assert!(j >= 1);
    let p = ctx.p() as i64;
    let mut gens = group_generators(ctx);
    for _ in 1..j {
        let mut next = Vec::new();
        for s in &gens {
            for x in group_generators(ctx) {
                next.push(s.commutator(&x)?);
            }
            next.push(s.power(p));
        }
        gens = dedup_nontrivial(next);
        if gens.is_empty() {
            break;
        }
    }
    Ok(gens)
}

/// γ_i(G_d^c) enumerated by normal closure; γ_1 is the whole group.
pub fn gamma_subgroup(
    ctx: &Arc<GroupContext>,
    i: u64,
    cap: usize,
) -> Result<SubgroupSet, EngineError> {
    if i == 1 {
        return full_group(ctx, cap);
    }
    subgroup_closure(ctx, &gamma_generators(ctx, i)?, &group_generators(ctx), cap)
}

/// λ_j(G_d^c) enumerated by normal closure; λ_1 is the whole group.
pub fn lambda_subgroup(
    ctx: &Arc<GroupContext>,
    j: u64,
    cap: usize,
) -> Result<SubgroupSet, EngineError> {
    if j == 1 {
        return full_group(ctx, cap);
    }
    subgroup_closure(
        ctx,
        &lambda_generators(ctx, j)?,
        &group_generators(ctx),
        cap,
    )
}

/// The lower central series γ_1 ⊇ γ_2 ⊇ … ⊇ γ_{c+1} = 1.
pub fn lower_central_series(
    ctx: &Arc<GroupContext>,
    cap: usize,
) -> Result<Vec<SubgroupSet>, EngineError> {
    (1..=ctx.c() as u64 + 1)
        .map(|i| gamma_subgroup(ctx, i, cap))
        .collect()
}

/// The Lazard series λ_1 ⊇ λ_2 ⊇ … ⊇ λ_{c+1} = 1.
pub fn lambda_series(ctx: &Arc<GroupContext>, cap: usize) -> Result<Vec<SubgroupSet>, EngineError> {
    (1..=ctx.c() as u64 + 1)
        .map(|j| lambda_subgroup(ctx, j, cap))
        .collect()
}

/// Brute-force center: all elements commuting with every group generator
/// (the generators generate, so this suffices).
pub fn center(ctx: &Arc<GroupContext>, cap: usize) -> Result<SubgroupSet, EngineError> {
    let whole = full_group(ctx, cap)?;
    let gens = group_generators(ctx);
    let mut elements = Vec::new();
    for g in whole.iter() {
        let mut central = true;
        for x in &gens {
            if !g.commutes_with(x)? {
                central = false;
                break;
            }
        }
        if central {
            elements.push(g.coords().to_vec());
        }
    }
    Ok(SubgroupSet::from_parts(
        Arc::clone(ctx),
        elements,
        Vec::new(),
    ))
}
