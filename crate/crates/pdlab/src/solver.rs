//! Exact partition-dimension search.
//!
//! Candidate partitions are enumerated as restricted-growth strings over the
//! vertex index order, so each unordered partition is visited exactly once
//! and the first witness found is the lexicographically least one. Resolving
//! is label-invariant, which makes searching unordered partitions sound.
//!
//! Pruning, all optional and all sound for existence:
//!  * twin prune: a vertex never joins the class of an earlier strong-
//!    equivalent vertex (such a partition cannot resolve);
//!  * the full resolving check runs only at complete assignments, with an
//!    early exit on the first representation collision;
//!  * family symmetry: for corona-of-complete inputs, block permutations
//!    are automorphisms; prefixes that are not lexicographically minimal in
//!    their orbit are skipped.
//!
//! The parallel driver splits the enumeration by fixed-length assignment
//! prefixes. Workers share only the immutable distance data; the merge keeps
//! the witness from the earliest prefix, so results are identical for every
//! thread count.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use crate::bounds::{chartrand_bounds, lower_bounds};
use crate::dist::{all_pairs_distances, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::{FamilyTag, Graph};
use crate::partition::{is_resolving, Partition};
use crate::structure::separation_constraints;

/// Node and wall-clock budgets. `None` means unlimited.
#[derive(Debug, Clone, Copy, Default, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Budget {
    pub nodes: Option<u64>,
    pub seconds: Option<f64>,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget {
        nodes: None,
        seconds: None,
    };
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SymmetryMode {
    Off,
    /// Break copy-permutation symmetry when the input carries a family tag.
    Family,
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct SolveOpts {
    pub budget: Budget,
    pub prune_twins: bool,
    pub symmetry: SymmetryMode,
    /// Worker count for the parallel driver; `None` uses the pool default.
    /// Ignored when the `parallel` feature is disabled.
    pub threads: Option<usize>,
}

impl Default for SolveOpts {
    fn default() -> Self {
        SolveOpts {
            budget: Budget::UNLIMITED,
            prune_twins: true,
            symmetry: SymmetryMode::Family,
            threads: None,
        }
    }
}

/// Search counters. Counts are deterministic for a fixed configuration but
/// legitimately vary with thread count: the prefix split depth depends on
/// the worker count, and once a witness is found, workers on provably later
/// prefixes stop early. Reports therefore omit stats unless asked.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct SolveStats {
    pub nodes: u64,
    pub leaves: u64,
    pub twin_prunes: u64,
    pub symmetry_prunes: u64,
    pub wall_ms: u64,
}

impl SolveStats {
    fn absorb(&mut self, other: &SolveStats) {
        self.nodes += other.nodes;
        self.leaves += other.leaves;
        self.twin_prunes += other.twin_prunes;
        self.symmetry_prunes += other.symmetry_prunes;
    }
}

/// Three-valued outcome of a fixed-k search.
#[derive(Debug, Clone, PartialEq)]
pub enum KOutcome {
    Found(Partition),
    Exhausted,
    BudgetExceeded,
}

/// Result of the iterative solve.
#[derive(Debug, Clone)]
pub struct PdResult {
    pub outcome: PdOutcome,
    pub lower_bounds: BTreeMap<&'static str, usize>,
    pub combined_lower: usize,
    pub upper_bound: usize,
    pub stats: SolveStats,
}

#[derive(Debug, Clone)]
pub enum PdOutcome {
    Decided {
        pd: usize,
        witness: Partition,
    },
    /// Budget ran out while k classes were still open; every smaller class
    /// count is already excluded, so `best_lower <= pd` holds.
    Undecided {
        at_k: usize,
        best_lower: usize,
    },
}

impl PdResult {
    pub fn pd(&self) -> Option<usize> {
        match &self.outcome {
            PdOutcome::Decided { pd, .. } => Some(*pd),
            PdOutcome::Undecided { .. } => None,
        }
    }
}

/// Searches for a resolving partition with exactly `k` classes.
pub fn exists_resolving_partition(
    g: &Graph,
    dist: &DistanceMatrix,
    k: usize,
    opts: &SolveOpts,
    tag: Option<FamilyTag>,
) -> Result<(KOutcome, SolveStats)> {
    let n = g.order();
    if k == 0 || k > n {
        return Err(Error::ClassCountRange { k, order: n });
    }
    // Class ids live in u8 with 255 reserved for "unassigned"; searches with
    // more classes than that are far beyond feasibility anyway.
    if k >= UNASSIGNED as usize {
        return Err(Error::Partition(format!(
            "solver supports at most {} classes",
            UNASSIGNED - 1
        )));
    }
    if !dist.is_connected() {
        return Err(Error::Partition(
            "solver requires a connected graph".to_string(),
        ));
    }
    let ctx = SearchContext::new(g, dist, k, opts, tag);
    let started = Instant::now();
    let (outcome, mut stats) = drive(&ctx, opts);
    stats.wall_ms = started.elapsed().as_millis() as u64;
    let outcome = match outcome {
        RawOutcome::Found(assign) => {
            let partition = Partition::from_assignment(assign, k)?;
            debug_assert!(partition.is_canonical());
            debug_assert!(is_resolving(g, dist, &partition)?.is_resolving());
            KOutcome::Found(partition)
        }
        RawOutcome::Exhausted => KOutcome::Exhausted,
        RawOutcome::BudgetExceeded => KOutcome::BudgetExceeded,
    };
    Ok((outcome, stats))
}

/// Exact partition dimension: iterate k upward from the combined lower
/// bound; the first k admitting a resolving partition is pd(G). A budget
/// overrun yields an explicit undecided outcome, never an approximation.
pub fn partition_dimension(
    g: &Graph,
    opts: &SolveOpts,
    tag: Option<FamilyTag>,
) -> Result<PdResult> {
    let dist = all_pairs_distances(g);
    if !dist.is_connected() {
        let (u, v) = first_unreachable(g, &dist);
        return Err(Error::Disconnected(u, v));
    }
    let lbs = lower_bounds(g, &dist)?;
    let combined = *lbs.values().max().unwrap();
    let (_, upper) = chartrand_bounds(g, &dist)?;
    let started = Instant::now();
    let mut stats = SolveStats::default();
    let mut remaining = opts.budget;

    for k in combined..=g.order() {
        let k_opts = SolveOpts {
            budget: remaining,
            ..*opts
        };
        let (outcome, k_stats) = exists_resolving_partition(g, &dist, k, &k_opts, tag)?;
        stats.absorb(&k_stats);
        if let Some(nodes) = remaining.nodes {
            remaining.nodes = Some(nodes.saturating_sub(k_stats.nodes));
        }
        if let Some(secs) = opts.budget.seconds {
            remaining.seconds = Some((secs - started.elapsed().as_secs_f64()).max(0.0));
        }
        match outcome {
            KOutcome::Found(witness) => {
                stats.wall_ms = started.elapsed().as_millis() as u64;
                assert!(combined <= k && k <= upper, "bound sandwich violated");
                assert!(witness.k() == k);
                return Ok(PdResult {
                    outcome: PdOutcome::Decided { pd: k, witness },
                    lower_bounds: lbs,
                    combined_lower: combined,
                    upper_bound: upper,
                    stats,
                });
            }
            KOutcome::Exhausted => continue,
            KOutcome::BudgetExceeded => {
                stats.wall_ms = started.elapsed().as_millis() as u64;
                return Ok(PdResult {
                    outcome: PdOutcome::Undecided {
                        at_k: k,
                        best_lower: k,
                    },
                    lower_bounds: lbs,
                    combined_lower: combined,
                    upper_bound: upper,
                    stats,
                });
            }
        }
    }
    unreachable!("the discrete partition always resolves, so k = order succeeds");
}

fn first_unreachable(g: &Graph, dist: &DistanceMatrix) -> (String, String) {
    for u in 0..g.order() {
        for v in u + 1..g.order() {
            if dist.get(u, v).is_none() {
                return (g.label(u).to_string(), g.label(v).to_string());
            }
        }
    }
    unreachable!("called only on disconnected graphs")
}

// ---------------------------------------------------------------------------
// Search internals
// ---------------------------------------------------------------------------

const UNASSIGNED: u8 = u8::MAX;
const NO_DIST: u16 = u16::MAX;
const BUDGET_CHECK_MASK: u64 = 0x1fff;

enum RawOutcome {
    Found(Vec<usize>),
    Exhausted,
    BudgetExceeded,
}

struct SearchContext {
    n: usize,
    k: usize,
    dist: Vec<u16>,
    /// For each vertex, its strong-equivalent partners with smaller index.
    twin_partners: Vec<Vec<u32>>,
    symmetry: Option<BlockSymmetry>,
    bits: u32,
    budget_nodes: Option<u64>,
    deadline: Option<Duration>,
    started: Instant,
}

struct BlockSymmetry {
    /// Position source maps: candidate[p] = assign[src[p]] before relabel.
    perms: Vec<Vec<u32>>,
    /// Depths (position of the just-assigned vertex) at which to test orbit
    /// minimality: the last position of each copy block.
    check_depths: Vec<bool>,
}

impl SearchContext {
    fn new(
        g: &Graph,
        dist: &DistanceMatrix,
        k: usize,
        opts: &SolveOpts,
        tag: Option<FamilyTag>,
    ) -> Self {
        let n = g.order();
        let mut flat = vec![0u16; n * n];
        let mut max_d = 1u16;
        for u in 0..n {
            for (v, &d) in dist.row(u).iter().enumerate() {
                let d = d as u16;
                flat[u * n + v] = d;
                max_d = max_d.max(d);
            }
        }
        let bits = 16 - u16::leading_zeros(max_d.max(1));

        let mut twin_partners = vec![Vec::new(); n];
        if opts.prune_twins {
            for (u, v) in separation_constraints(dist) {
                twin_partners[v].push(u as u32);
            }
        }

        let symmetry = match (opts.symmetry, tag) {
            (SymmetryMode::Family, Some(tag))
                if tag.centers >= 2 && n == tag.centers * (1 + tag.copy_order) =>
            {
                Some(BlockSymmetry::new(tag, n))
            }
            _ => None,
        };

        SearchContext {
            n,
            k,
            dist: flat,
            twin_partners,
            symmetry,
            bits,
            budget_nodes: opts.budget.nodes,
            deadline: opts.budget.seconds.map(Duration::from_secs_f64),
            started: Instant::now(),
        }
    }
}

impl BlockSymmetry {
    fn new(tag: FamilyTag, n: usize) -> Self {
        let nb = tag.centers;
        let h = tag.copy_order;
        let mut perms = Vec::new();
        for perm in permutations(nb) {
            if perm.iter().enumerate().all(|(i, &p)| i == p) {
                continue;
            }
            let mut src = vec![0u32; n];
            for (i, &pi) in perm.iter().enumerate() {
                src[i] = pi as u32;
                for o in 0..h {
                    src[nb + i * h + o] = (nb + pi * h + o) as u32;
                }
            }
            perms.push(src);
        }
        let mut check_depths = vec![false; n];
        for c in 1..=nb {
            check_depths[nb + c * h - 1] = true;
        }
        BlockSymmetry {
            perms,
            check_depths,
        }
    }
}

/// All permutations of `0..nb` in lexicographic order; falls back to
/// transpositions beyond 5 blocks to keep the constraint set small.
fn permutations(nb: usize) -> Vec<Vec<usize>> {
    if nb <= 5 {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (0..nb).collect();
        heap_permute(&mut current, nb, &mut out);
        out.sort();
        out
    } else {
        let mut out = Vec::new();
        for i in 0..nb {
            for j in i + 1..nb {
                let mut p: Vec<usize> = (0..nb).collect();
                p.swap(i, j);
                out.push(p);
            }
        }
        out
    }
}

fn heap_permute(current: &mut Vec<usize>, size: usize, out: &mut Vec<Vec<usize>>) {
    if size == 1 {
        out.push(current.clone());
        return;
    }
    for i in 0..size {
        heap_permute(current, size - 1, out);
        if size.is_multiple_of(2) {
            current.swap(i, size - 1);
        } else {
            current.swap(0, size - 1);
        }
    }
}

struct Worker<'a> {
    ctx: &'a SearchContext,
    assign: Vec<u8>,
    /// Current minimum distance from each vertex to each class, n x k.
    cur: Vec<u16>,
    trail: Vec<(u32, u16)>,
    stats: SolveStats,
    found: Option<Vec<usize>>,
    aborted: bool,
    /// Shared across parallel workers: least prefix index with a witness.
    best_prefix: Option<&'a AtomicU64>,
    budget_blown: Option<&'a AtomicBool>,
    my_prefix: u64,
    // Leaf-check scratch.
    bitmap: Vec<u64>,
    touched: Vec<u32>,
    keys: Vec<u128>,
    relabel: Vec<u8>,
}

impl<'a> Worker<'a> {
    fn new(ctx: &'a SearchContext) -> Self {
        let packed_bits = ctx.bits as usize * ctx.k;
        let bitmap_words = if packed_bits <= 12 {
            (1usize << packed_bits).div_ceil(64)
        } else {
            0
        };
        Worker {
            ctx,
            assign: vec![UNASSIGNED; ctx.n],
            cur: vec![NO_DIST; ctx.n * ctx.k],
            trail: Vec::with_capacity(ctx.n * ctx.n),
            stats: SolveStats::default(),
            found: None,
            aborted: false,
            best_prefix: None,
            budget_blown: None,
            my_prefix: 0,
            bitmap: vec![0u64; bitmap_words],
            touched: Vec::with_capacity(ctx.n),
            keys: Vec::with_capacity(ctx.n),
            relabel: vec![UNASSIGNED; ctx.k],
        }
    }

    fn over_budget(&mut self) -> bool {
        if self.stats.nodes & BUDGET_CHECK_MASK == 0 {
            if let Some(flag) = self.budget_blown {
                if flag.load(Ordering::Relaxed) {
                    self.aborted = true;
                    return true;
                }
            }
            if let Some(limit) = self.ctx.deadline {
                if self.ctx.started.elapsed() >= limit {
                    self.aborted = true;
                    if let Some(flag) = self.budget_blown {
                        flag.store(true, Ordering::Relaxed);
                    }
                    return true;
                }
            }
            if let Some(best) = self.best_prefix {
                if best.load(Ordering::Relaxed) < self.my_prefix {
                    // A provably earlier prefix already holds a witness.
                    return true;
                }
            }
        }
        if let Some(limit) = self.ctx.budget_nodes {
            if self.stats.nodes >= limit {
                self.aborted = true;
                if let Some(flag) = self.budget_blown {
                    flag.store(true, Ordering::Relaxed);
                }
                return true;
            }
        }
        false
    }

    /// Places vertex `t` into class `c`, updating the class-distance table.
    fn place(&mut self, t: usize, c: usize) {
        let n = self.ctx.n;
        let k = self.ctx.k;
        self.assign[t] = c as u8;
        let row = &self.ctx.dist[t * n..(t + 1) * n];
        for (u, &d) in row.iter().enumerate() {
            let slot = u * k + c;
            if d < self.cur[slot] {
                self.trail.push((slot as u32, self.cur[slot]));
                self.cur[slot] = d;
            }
        }
    }

    fn unplace(&mut self, t: usize, trail_mark: usize) {
        self.assign[t] = UNASSIGNED;
        while self.trail.len() > trail_mark {
            let (slot, old) = self.trail.pop().unwrap();
            self.cur[slot as usize] = old;
        }
    }

    fn dfs(&mut self, t: usize, classes_used: usize) {
        if self.found.is_some() || self.aborted {
            return;
        }
        if t == self.ctx.n {
            self.check_leaf(classes_used);
            return;
        }
        let k = self.ctx.k;
        let open_new = classes_used < k;
        let limit = if open_new { classes_used } else { k - 1 };
        'classes: for c in 0..=limit {
            let used_after = classes_used + usize::from(c == classes_used);
            // Remaining vertices must still be able to open missing classes.
            if used_after + (self.ctx.n - t - 1) < k {
                continue;
            }
            for &p in &self.ctx.twin_partners[t] {
                if self.assign[p as usize] == c as u8 {
                    self.stats.twin_prunes += 1;
                    continue 'classes;
                }
            }
            self.stats.nodes += 1;
            if self.over_budget() {
                return;
            }
            let mark = self.trail.len();
            self.place(t, c);
            if self.prefix_dominated(t) {
                self.stats.symmetry_prunes += 1;
            } else {
                self.dfs(t + 1, used_after);
            }
            self.unplace(t, mark);
            if self.found.is_some() || self.aborted {
                return;
            }
        }
    }

    /// Orbit-minimality test under block permutations: prune when some
    /// permuted-and-relabelled assignment is lexicographically smaller on
    /// the already-determined positions.
    fn prefix_dominated(&mut self, t: usize) -> bool {
        let Some(sym) = &self.ctx.symmetry else {
            return false;
        };
        if t + 1 < self.ctx.n && !sym.check_depths[t] {
            return false;
        }
        'perms: for src in &sym.perms {
            self.relabel.fill(UNASSIGNED);
            let mut next = 0u8;
            for (p, &source) in src.iter().enumerate().take(t + 1) {
                let s = source as usize;
                if s > t {
                    continue 'perms;
                }
                let raw = self.assign[s];
                debug_assert_ne!(raw, UNASSIGNED);
                if self.relabel[raw as usize] == UNASSIGNED {
                    self.relabel[raw as usize] = next;
                    next += 1;
                }
                let val = self.relabel[raw as usize];
                match val.cmp(&self.assign[p]) {
                    std::cmp::Ordering::Less => return true,
                    std::cmp::Ordering::Greater => continue 'perms,
                    std::cmp::Ordering::Equal => {}
                }
            }
        }
        false
    }

    fn check_leaf(&mut self, classes_used: usize) {
        debug_assert_eq!(classes_used, self.ctx.k);
        self.stats.leaves += 1;
        if self.leaf_resolves() {
            self.found = Some(self.assign.iter().map(|&c| c as usize).collect());
        }
    }

    /// All classes are nonempty here, so every entry of `cur` is finite.
    /// Packs each representation vector and tests pairwise distinctness,
    /// aborting on the first collision.
    fn leaf_resolves(&mut self) -> bool {
        let n = self.ctx.n;
        let k = self.ctx.k;
        let bits = self.ctx.bits;
        if !self.bitmap.is_empty() {
            self.touched.clear();
            let mut ok = true;
            for v in 0..n {
                let mut key = 0usize;
                for i in 0..k {
                    key = (key << bits) | self.cur[v * k + i] as usize;
                }
                let (word, bit) = (key / 64, key % 64);
                if self.bitmap[word] & (1 << bit) != 0 {
                    ok = false;
                    break;
                }
                self.bitmap[word] |= 1 << bit;
                self.touched.push(key as u32);
            }
            for &key in &self.touched {
                self.bitmap[key as usize / 64] &= !(1u64 << (key % 64));
            }
            ok
        } else if (bits as usize) * k <= 128 {
            self.keys.clear();
            for v in 0..n {
                let mut key = 0u128;
                for i in 0..k {
                    key = (key << bits) | self.cur[v * k + i] as u128;
                }
                self.keys.push(key);
            }
            self.keys.sort_unstable();
            self.keys.windows(2).all(|w| w[0] != w[1])
        } else {
            for u in 0..n {
                for v in u + 1..n {
                    if self.cur[u * k..(u + 1) * k] == self.cur[v * k..(v + 1) * k] {
                        return false;
                    }
                }
            }
            true
        }
    }
}

/// Sequential search over the whole tree.
fn run_sequential(ctx: &SearchContext) -> (RawOutcome, SolveStats) {
    let mut w = Worker::new(ctx);
    w.dfs(0, 0);
    finishing(w.found, w.aborted, w.stats)
}

fn finishing(
    found: Option<Vec<usize>>,
    aborted: bool,
    stats: SolveStats,
) -> (RawOutcome, SolveStats) {
    let outcome = match found {
        Some(assign) => RawOutcome::Found(assign),
        None if aborted => RawOutcome::BudgetExceeded,
        None => RawOutcome::Exhausted,
    };
    (outcome, stats)
}

/// Enumerates the surviving assignment prefixes of a fixed depth together
/// with the class count each one uses. Applies the same prunes as the deep
/// search so workers start from exactly the nodes the sequential search
/// would visit.
fn enumerate_prefixes(ctx: &SearchContext, depth: usize) -> Vec<(Vec<u8>, usize)> {
    fn rec(
        ctx: &SearchContext,
        w: &mut Worker,
        t: usize,
        classes_used: usize,
        depth: usize,
        out: &mut Vec<(Vec<u8>, usize)>,
    ) {
        if t == depth {
            out.push((w.assign[..depth].to_vec(), classes_used));
            return;
        }
        let k = ctx.k;
        let open_new = classes_used < k;
        let limit = if open_new { classes_used } else { k - 1 };
        'classes: for c in 0..=limit {
            let used_after = classes_used + usize::from(c == classes_used);
            if used_after + (ctx.n - t - 1) < k {
                continue;
            }
            for &p in &ctx.twin_partners[t] {
                if w.assign[p as usize] == c as u8 {
                    continue 'classes;
                }
            }
            let mark = w.trail.len();
            w.place(t, c);
            if !w.prefix_dominated(t) {
                rec(ctx, w, t + 1, used_after, depth, out);
            }
            w.unplace(t, mark);
        }
    }
    let mut scout = Worker::new(ctx);
    let mut out = Vec::new();
    rec(ctx, &mut scout, 0, 0, depth, &mut out);
    out
}

#[cfg(feature = "parallel")]
fn drive(ctx: &SearchContext, opts: &SolveOpts) -> (RawOutcome, SolveStats) {
    use rayon::prelude::*;

    let threads = opts.threads.unwrap_or_else(rayon::current_num_threads);
    // Node budgets are exactness tools: run them on one thread so the node
    // accounting is exact and the undecided threshold is reproducible.
    if threads <= 1 || ctx.n < 6 || ctx.budget_nodes.is_some() {
        return run_sequential(ctx);
    }

    // Split deep enough to keep every worker busy, shallow enough that the
    // prefix list stays small.
    let target = threads * 48;
    let mut depth = 1;
    let mut prefixes = enumerate_prefixes(ctx, depth);
    while prefixes.len() < target && depth + 2 < ctx.n {
        depth += 1;
        prefixes = enumerate_prefixes(ctx, depth);
        if prefixes.len() > 1 << 16 {
            break;
        }
    }

    let best_prefix = AtomicU64::new(u64::MAX);
    let budget_blown = AtomicBool::new(false);

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool");

    let results: Vec<(u64, Option<Vec<usize>>, bool, SolveStats)> = pool.install(|| {
        prefixes
            .par_iter()
            .enumerate()
            .map(|(idx, (prefix, classes_used))| {
                let idx = idx as u64;
                if best_prefix.load(Ordering::Relaxed) < idx || budget_blown.load(Ordering::Relaxed)
                {
                    return (
                        idx,
                        None,
                        budget_blown.load(Ordering::Relaxed),
                        SolveStats::default(),
                    );
                }
                let mut w = Worker::new(ctx);
                w.best_prefix = Some(&best_prefix);
                w.budget_blown = Some(&budget_blown);
                w.my_prefix = idx;
                for (t, &c) in prefix.iter().enumerate() {
                    w.place(t, c as usize);
                }
                w.dfs(prefix.len(), *classes_used);
                if w.found.is_some() {
                    best_prefix.fetch_min(idx, Ordering::Relaxed);
                }
                (idx, w.found, w.aborted, w.stats)
            })
            .collect()
    });

    let mut stats = SolveStats::default();
    let mut aborted = false;
    let mut best: Option<(u64, Vec<usize>)> = None;
    for (idx, found, worker_aborted, s) in results {
        stats.absorb(&s);
        aborted |= worker_aborted;
        if let Some(assign) = found {
            if best.as_ref().is_none_or(|(b, _)| idx < *b) {
                best = Some((idx, assign));
            }
        }
    }
    match best {
        Some((_, assign)) => (RawOutcome::Found(assign), stats),
        None => finishing(None, aborted || budget_blown.load(Ordering::Relaxed), stats),
    }
}

#[cfg(not(feature = "parallel"))]
fn drive(ctx: &SearchContext, _opts: &SolveOpts) -> (RawOutcome, SolveStats) {
    run_sequential(ctx)
}
