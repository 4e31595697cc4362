//! Randomized transitivity search for the discrete dispersive orders.
//!
//! The meet order is *not* transitive in general: this module hunts for a
//! witness triple `F ⪯∧ G ⪯∧ H` with `F ⪯̸∧ H` by growing a pool of small
//! random distributions on a half-integer grid, maintaining the directed
//! graph of verified order edges, and examining every two-edge path as it
//! appears. The join order is transitive, and the meet order is transitive
//! on lattice distributions; in those modes the same budget of verified
//! chains is examined and no witness must ever appear.

use std::collections::HashSet;

use rand_chacha::ChaCha8Rng;

use crate::dist::DiscreteDist;
use crate::orders::OrderKind;
use crate::scalar::Tol;
use crate::{Error, Result};

use super::random::{self, GenConfig};

/// Outcome of a transitivity search.
#[derive(Debug, Clone)]
pub struct SearchReport {
    pub order: OrderKind,
    pub lattice_only: bool,
    /// Two-edge chains `F ⪯ G ⪯ H` whose closure was checked.
    pub triples_examined: u64,
    /// Distributions drawn into the candidate pool (meet-order search).
    pub pool_size: usize,
    pub witness: Option<[DiscreteDist; 3]>,
}

/// Generator grid for the meet-order search: at most four atoms on the
/// half-integer grid `{0, 1/2, …, 5}` with small integer weights. Kept
/// deliberately tight — intransitivity witnesses live among small
/// non-lattice laws, and a dense pool makes order edges frequent.
fn search_config(lattice_only: bool) -> GenConfig {
    GenConfig {
        max_atoms: 4,
        max_weight: 5,
        grid_denom: 2,
        value_min: 0,
        value_max: 10,
        lattice_only,
    }
}

fn decide(order: OrderKind, f: &DiscreteDist, g: &DiscreteDist, tol: Tol) -> bool {
    order.decide(f, g, tol).holds
}

/// Search for a non-transitivity witness of `order` (meet or join).
///
/// `budget` bounds the number of verified two-edge chains whose closure is
/// checked. Identical `(order, budget, seed, lattice_only)` runs produce
/// identical reports. Any returned witness has been re-verified from
/// scratch: both edges hold and the closing comparison fails.
pub fn transitivity_search(
    order: OrderKind,
    budget: u64,
    seed: u64,
    lattice_only: bool,
    tol: Tol,
) -> Result<SearchReport> {
    match order {
        OrderKind::And | OrderKind::Or => {}
        other => {
            return Err(Error::BadParam(format!(
                "transitivity search supports the meet and join orders, got {}",
                other.name()
            )))
        }
    }
    let mut report = SearchReport {
        order,
        lattice_only,
        triples_examined: 0,
        pool_size: 0,
        witness: None,
    };
    let mut rng = random::rng(seed);
    if order == OrderKind::Or || lattice_only {
        chained_search(order, budget, lattice_only, &mut rng, tol, &mut report);
    } else {
        pool_search(budget, &mut rng, tol, &mut report);
    }
    Ok(report)
}

/// Join order / lattice mode: generate triples chained by construction
/// (refinements for the join order, affine maps on a lattice base for the
/// lattice mode), verify both edges, and check the closure. These modes are
/// expected to stay witness-free.
fn chained_search(
    order: OrderKind,
    budget: u64,
    lattice_only: bool,
    rng: &mut ChaCha8Rng,
    tol: Tol,
    report: &mut SearchReport,
) {
    let cfg = search_config(lattice_only);
    while report.triples_examined < budget {
        let triple = if lattice_only {
            lattice_triple(&cfg, rng)
        } else {
            let f = random::random_dist(&cfg, rng);
            let g = random::refine_stretch_of(&f, &cfg, rng);
            let h = random::refine_stretch_of(&g, &cfg, rng);
            [f, g, h]
        };
        let [f, g, h] = &triple;
        if !decide(order, f, g, tol) || !decide(order, g, h, tol) {
            continue; // not a verified chain; try again without consuming budget
        }
        report.triples_examined += 1;
        if !decide(order, f, h, tol) {
            report.witness = Some(triple);
            return;
        }
    }
}

/// A lattice chain: alternate between affine images (guaranteed edges) and
/// independent draws (edges verified, mostly rejected).
fn lattice_triple(cfg: &GenConfig, rng: &mut ChaCha8Rng) -> [DiscreteDist; 3] {
    use rand::Rng;
    let f = random::random_dist(cfg, rng);
    if rng.random_bool(0.7) {
        let a = crate::scalar::Scalar::int(rng.random_range(1..=2));
        let b = crate::scalar::Scalar::int(rng.random_range(-2..=2));
        let g = f.affine(&a, &b).expect("nonzero scale");
        let c = crate::scalar::Scalar::int(rng.random_range(1..=2));
        let h = g.affine(&c, &b).expect("nonzero scale");
        [f, g, h]
    } else {
        [
            f,
            random::random_dist(cfg, rng),
            random::random_dist(cfg, rng),
        ]
    }
}

/// Meet-order pool search: grow a pool of distinct laws, maintain verified
/// edges, and examine each two-edge path exactly once (when its newest node
/// arrives).
fn pool_search(budget: u64, rng: &mut ChaCha8Rng, tol: Tol, report: &mut SearchReport) {
    let cfg = search_config(false);
    let mut pool: Vec<DiscreteDist> = Vec::new();
    let mut edges: HashSet<(usize, usize)> = HashSet::new();
    let mut outgoing: Vec<Vec<usize>> = Vec::new();
    let mut incoming: Vec<Vec<usize>> = Vec::new();

    'grow: while report.triples_examined < budget {
        if pool.len() >= 20_000 {
            break; // edge graph too sparse to ever exhaust the budget
        }
        let d = random::random_dist(&cfg, rng);
        if pool.iter().any(|e| e.same_law(&d, tol)) {
            continue;
        }
        let i = pool.len();
        pool.push(d);
        outgoing.push(Vec::new());
        incoming.push(Vec::new());
        for j in 0..i {
            if decide(OrderKind::And, &pool[i], &pool[j], tol) {
                edges.insert((i, j));
                outgoing[i].push(j);
                incoming[j].push(i);
            }
            if decide(OrderKind::And, &pool[j], &pool[i], tol) {
                edges.insert((j, i));
                outgoing[j].push(i);
                incoming[i].push(j);
            }
        }
        report.pool_size = pool.len();

        // every two-edge path through, into, or out of the new node
        let mut paths: Vec<(usize, usize, usize)> = Vec::new();
        for &a in &incoming[i] {
            for &b in &outgoing[i] {
                paths.push((a, i, b));
            }
        }
        for &m in &outgoing[i] {
            for &b in &outgoing[m] {
                paths.push((i, m, b));
            }
        }
        for &m in &incoming[i] {
            for &a in &incoming[m] {
                paths.push((a, m, i));
            }
        }
        for (a, m, b) in paths {
            if a == b || a == m || m == b {
                continue;
            }
            if report.triples_examined >= budget {
                break 'grow;
            }
            report.triples_examined += 1;
            if !edges.contains(&(a, b)) {
                // candidate witness: re-verify every leg from scratch
                let (f, g, h) = (&pool[a], &pool[m], &pool[b]);
                if decide(OrderKind::And, f, g, tol)
                    && decide(OrderKind::And, g, h, tol)
                    && !decide(OrderKind::And, f, h, tol)
                {
                    report.witness = Some([f.clone(), g.clone(), h.clone()]);
                    return;
                }
            }
        }
    }
}
