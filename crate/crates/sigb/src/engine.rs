//! The signature main loops: genSB, RB and its incremental F5C variant.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{reduce, Polynomial, ReductionMode, Ring};
use crate::sigcore::{gvw2013_regenerate, koszul_init, regenerate_against_inputs, PairOutcome, RewriteOrder, SPair, SigBasis, SigPoly, SyzygySet};
use crate::sigspace::{ModuleOrder, ModuleOrderKind, SigKey, Signature};

/// Counters reported for every run.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunStats {
    pub zero_reductions: u64,
    pub basis_size: u64,
    /// Syzygies entered into `H` (Koszul, regenerated principal and zero
    /// reductions), counted without divisibility pruning.
    pub syzygy_count: u64,
    /// Size of the divisibility-minimal signature set that `H` is kept as.
    #[serde(default)]
    pub syzygy_count_pruned: u64,
    pub s_reduction_steps: u64,
    pub multiplications: u64,
    pub interred_reduction_steps: u64,
    pub interred_multiplications: u64,
}

/// Processing order of the pair queue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairPolicy {
    /// Increasing signature.
    #[default]
    SigIncreasing,
    /// Increasing S-polynomial degree, then signature.
    DegreeThenSig,
}

/// Which main loop to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    GenSb,
    #[default]
    Rb,
    F4Rb,
}

impl Algorithm {
    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::GenSb => "gensb",
            Algorithm::Rb => "rb",
            Algorithm::F4Rb => "f4rb",
        }
    }
}

impl std::str::FromStr for Algorithm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gensb" => Ok(Algorithm::GenSb),
            "rb" => Ok(Algorithm::Rb),
            "f4rb" => Ok(Algorithm::F4Rb),
            _ => Err(Error::InvalidArgument(format!("unknown signature engine `{s}`"))),
        }
    }
}

/// Everything that selects a variant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EngineConfig {
    pub module_order: ModuleOrderKind,
    pub rewrite: RewriteOrder,
    pub reduction_mode: ReductionMode,
    pub pair_policy: PairPolicy,
    pub algorithm: Algorithm,
    /// F5C: interreduce between incremental steps (pot only).
    pub incremental_interreduce: bool,
    /// Add principal syzygy signatures for every new basis element.
    pub gvw2013: bool,
    /// Lower generator index is greater.
    pub legacy_index_direction: bool,
    /// Record the signature of an S-pair with coprime lead monomials in `H`
    /// instead of reducing it.
    pub product_criterion: bool,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            module_order: ModuleOrderKind::Pot,
            rewrite: RewriteOrder::Add,
            reduction_mode: ReductionMode::Top,
            pair_policy: PairPolicy::SigIncreasing,
            algorithm: Algorithm::Rb,
            incremental_interreduce: false,
            gvw2013: false,
            legacy_index_direction: false,
            product_criterion: false,
        }
    }
}

impl EngineConfig {
    pub fn new(module_order: ModuleOrderKind, rewrite: RewriteOrder) -> Self {
        EngineConfig {
            module_order,
            rewrite,
            ..Default::default()
        }
    }
}

/// Output of a signature run.
#[derive(Debug, Clone)]
pub struct SigRun {
    /// Module generators `e_i ↦ f_i` in force at the end (re-indexed under F5C).
    pub generators: Vec<Polynomial>,
    pub order: ModuleOrder,
    pub basis: Vec<SigPoly>,
    pub syzygies: SyzygySet,
    pub stats: RunStats,
    /// Signature and polynomial of every element in insertion order, across
    /// all incremental steps.
    pub trace: Vec<(Signature, Polynomial)>,
}

impl SigRun {
    /// Polynomial parts of the basis.
    pub fn polys(&self) -> Vec<Polynomial> {
        self.basis.iter().map(|e| e.poly.clone()).collect()
    }
}

/// A queue entry: an input vector `e_i` or an S-pair.
#[derive(Debug, Clone)]
pub enum QueueItem {
    Unit(usize),
    Pair(SPair),
}

impl QueueItem {
    pub fn sig(&self, nvars: usize) -> Signature {
        match self {
            QueueItem::Unit(i) => Signature::unit(nvars, *i),
            QueueItem::Pair(p) => p.sig.clone(),
        }
    }
}

#[derive(Debug)]
struct Entry {
    key: SigKey,
    seq: u64,
    item: QueueItem,
}

impl PartialEq for Entry {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Entry {}
impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Entry {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key.cmp(&other.key).then(self.seq.cmp(&other.seq))
    }
}

/// Pending pairs and unit vectors, popped in the configured order.
#[derive(Debug)]
pub struct PairQueue {
    heap: BinaryHeap<Reverse<Entry>>,
    policy: PairPolicy,
    seq: u64,
}

impl PairQueue {
    pub fn new(policy: PairPolicy) -> Self {
        PairQueue {
            heap: BinaryHeap::new(),
            policy,
            seq: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.heap.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heap.is_empty()
    }

    /// Queues an item. Ties in signature fall back to the lcm, then the
    /// generator positions, then arrival.
    pub fn push(&mut self, item: QueueItem, order: &ModuleOrder, basis: &SigBasis) {
        let nvars = order.lead(1).nvars();
        let sig = item.sig(nvars);
        let mut key = SigKey::new();
        if self.policy == PairPolicy::DegreeThenSig {
            key.push(match &item {
                QueueItem::Unit(i) => order.gen_degree(*i),
                QueueItem::Pair(p) => p.degree,
            });
        }
        key.extend(order.key(&sig));
        match &item {
            QueueItem::Unit(i) => {
                key.push(0);
                key.push(*i as u32);
                key.push(0);
            }
            QueueItem::Pair(p) => {
                key.push(1);
                key.push(basis.get(p.big).ordinal as u32);
                key.push(basis.get(p.small).ordinal as u32);
            }
        }
        self.seq += 1;
        self.heap.push(Reverse(Entry {
            key,
            seq: self.seq,
            item,
        }));
    }

    pub fn pop(&mut self) -> Option<QueueItem> {
        self.heap.pop().map(|Reverse(e)| e.item)
    }

    /// Arrival counter, for [`PairQueue::min_sig_since`].
    pub(crate) fn mark(&self) -> u64 {
        self.seq
    }

    /// Smallest signature among the entries queued after `mark`.
    pub(crate) fn min_sig_since(&self, mark: u64, order: &ModuleOrder) -> Option<Signature> {
        let nvars = order.lead(1).nvars();
        self.heap
            .iter()
            .filter(|Reverse(e)| e.seq > mark)
            .map(|Reverse(e)| e.item.sig(nvars))
            .min_by(|a, b| order.cmp(a, b))
    }

    /// Removes every entry whose signature-degree batch key equals the minimum.
    pub(crate) fn pop_batch(&mut self, order: &ModuleOrder) -> Vec<QueueItem> {
        let nvars = order.lead(1).nvars();
        let mut out = Vec::new();
        let Some(Reverse(first)) = self.heap.pop() else {
            return out;
        };
        let bk = |it: &QueueItem| -> (u32, u32) {
            let s = it.sig(nvars);
            order.batch_key(&s)
        };
        let target = bk(&first.item);
        out.push(first.item);
        while let Some(Reverse(e)) = self.heap.peek() {
            if bk(&e.item) != target {
                break;
            }
            out.push(self.heap.pop().unwrap().0.item);
        }
        out
    }
}

/// State of one signature computation.
pub(crate) struct Loop<'a> {
    pub ring: &'a Ring,
    pub gens: Vec<Polynomial>,
    pub order: ModuleOrder,
    pub cfg: &'a EngineConfig,
    pub g: SigBasis,
    pub h: SyzygySet,
    pub stats: RunStats,
    pub trace: Vec<(Signature, Polynomial)>,
}

impl Loop<'_> {
    fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    /// Inserts a new element, queues its regular, non-rewritable S-pairs and
    /// optionally regenerates principal syzygies.
    pub(crate) fn insert(&mut self, sig: Signature, poly: Polynomial, queue: &mut PairQueue) {
        self.trace.push((sig.clone(), poly.clone()));
        let k = self.g.push(sig, poly);
        let prune = self.cfg.algorithm != Algorithm::GenSb;
        for j in 0..k {
            if let PairOutcome::Regular(sp) = self.g.make_spair(k, j, &self.order).expect("nonzero basis") {
                if prune && self.g.rewritable(&sp, &self.h, self.cfg.rewrite) {
                    continue;
                }
                queue.push(QueueItem::Pair(sp), &self.order, &self.g);
            }
        }
        if prune {
            regenerate_against_inputs(&self.g, k, &self.gens, &mut self.h, &self.order);
        }
        if self.cfg.gvw2013 {
            gvw2013_regenerate(&self.g, k, &mut self.h, &self.order);
        }
    }

    /// Whether RB may skip the item.
    pub(crate) fn item_rewritable(&self, item: &QueueItem) -> bool {
        match item {
            QueueItem::Unit(i) => {
                let e = Signature::unit(self.nvars(), *i);
                self.g.canonical_rewriter(&e, &self.h, self.cfg.rewrite, &self.order).is_ok()
            }
            QueueItem::Pair(sp) => self.g.rewritable(sp, &self.h, self.cfg.rewrite),
        }
    }

    /// Whether the item is an S-pair whose two lead monomials are coprime.
    pub(crate) fn coprime_pair(&self, item: &QueueItem) -> bool {
        match item {
            QueueItem::Unit(_) => false,
            QueueItem::Pair(sp) => self.g.get(sp.big).lm().coprime(self.g.get(sp.small).lm()),
        }
    }

    pub(crate) fn item_poly(&mut self, item: &QueueItem) -> Polynomial {
        match item {
            QueueItem::Unit(i) => self.gens[*i - 1].monic(&self.ring.field),
            QueueItem::Pair(sp) => self.g.spoly(&self.ring.field, sp, &mut self.stats),
        }
    }

    /// Runs the queue to exhaustion.
    fn run(&mut self, queue: &mut PairQueue) {
        let gensb = self.cfg.algorithm == Algorithm::GenSb;
        while let Some(item) = queue.pop() {
            if !gensb && self.item_rewritable(&item) {
                continue;
            }
            let sig = item.sig(self.nvars());
            if self.cfg.product_criterion && self.coprime_pair(&item) {
                self.h.insert(sig);
                continue;
            }
            let p = self.item_poly(&item);
            let red = self.g.regular_s_reduce(
                &self.ring.field,
                p,
                &sig,
                &self.h,
                &self.order,
                self.cfg.rewrite,
                self.cfg.reduction_mode,
                &mut self.stats,
            );
            if red.is_zero() {
                self.stats.zero_reductions += 1;
                self.h.insert(sig);
                continue;
            }
            if gensb && self.g.is_singular_top_reducible(&sig, red.lm()) {
                continue;
            }
            self.insert(sig, red, queue);
        }
    }
}

fn check_inputs(inputs: &[Polynomial]) -> Result<()> {
    if inputs.iter().any(|f| f.is_zero()) {
        return Err(Error::ZeroOperand);
    }
    Ok(())
}

/// Mutual full reduction until no lead divides a term of another element.
/// Returns monic polynomials; counts go to `stats.s_reduction_steps` and
/// `stats.multiplications` of the scratch record.
pub fn interreduce(ring: &Ring, polys: &[Polynomial], stats: &mut RunStats) -> Vec<Polynomial> {
    let mut cur: Vec<Polynomial> = polys.iter().filter(|p| !p.is_zero()).map(|p| p.monic(&ring.field)).collect();
    loop {
        let mut changed = false;
        let mut k = 0;
        while k < cur.len() {
            let others: Vec<Polynomial> = cur
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != k)
                .map(|(_, p)| p.clone())
                .collect();
            let red = reduce(ring, &cur[k], &others, ReductionMode::Full, stats).monic(&ring.field);
            if red != cur[k] {
                changed = true;
                if red.is_zero() {
                    cur.remove(k);
                    continue;
                }
                cur[k] = red;
            }
            k += 1;
        }
        if !changed {
            break;
        }
    }
    cur.sort_by(|a, b| crate::base::grevlex(a.lm(), b.lm()));
    cur
}

/// Reduced Gröbner basis of a Gröbner basis: minimal leads, full tail
/// reduction, monic, sorted by increasing lead monomial.
pub(crate) fn reduce_gb(ring: &Ring, g: &[Polynomial], stats: &mut RunStats) -> Vec<Polynomial> {
    let mut polys: Vec<Polynomial> = g.iter().filter(|p| !p.is_zero()).map(|p| p.monic(&ring.field)).collect();
    polys.sort_by(|a, b| crate::base::grevlex(a.lm(), b.lm()));
    let mut minimal: Vec<Polynomial> = Vec::new();
    for p in polys {
        if !minimal.iter().any(|q| q.lm().divides(p.lm())) {
            minimal.push(p);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != k)
            .map(|(_, p)| p.clone())
            .collect();
        out.push(reduce(ring, &minimal[k], &others, ReductionMode::Full, stats).monic(&ring.field));
    }
    out
}

fn run_plain(ring: &Ring, inputs: &[Polynomial], cfg: &EngineConfig) -> Result<SigRun> {
    let order = ModuleOrder::new(cfg.module_order, inputs)?.with_legacy_index_direction(cfg.legacy_index_direction);
    // RB fills H through regeneration as elements arrive, starting with the
    // units; that covers the Koszul signatures of the inputs.
    let mut lp = Loop {
        ring,
        gens: inputs.to_vec(),
        order,
        cfg,
        g: SigBasis::new(),
        h: SyzygySet::new(),
        stats: RunStats::default(),
        trace: Vec::new(),
    };
    let mut queue = PairQueue::new(cfg.pair_policy);
    for i in 1..=inputs.len() {
        queue.push(QueueItem::Unit(i), &lp.order, &lp.g);
    }
    lp.run(&mut queue);
    Ok(finish(lp))
}

fn finish(lp: Loop<'_>) -> SigRun {
    let Loop {
        gens,
        order,
        g,
        h,
        stats,
        trace,
        ..
    } = lp;
    let basis = g.into_elems();
    let stats = run_stats_finalize(&basis, &h, stats);
    SigRun {
        generators: gens,
        order,
        basis,
        syzygies: h,
        stats,
        trace,
    }
}

/// Freezes the counters: `basis_size = |G|`, `syzygy_count` = syzygies
/// entered into `H`, `syzygy_count_pruned` = its minimal signature set.
pub fn run_stats_finalize(g: &[SigPoly], h: &SyzygySet, mut stats: RunStats) -> RunStats {
    stats.basis_size = g.len() as u64;
    stats.syzygy_count = h.entered() as u64;
    stats.syzygy_count_pruned = h.len() as u64;
    stats
}

/// Result of one F5C reset.
#[derive(Debug, Clone)]
pub struct Reset {
    pub generators: Vec<Polynomial>,
    pub order: ModuleOrder,
    pub basis: SigBasis,
    pub syzygies: SyzygySet,
    /// Index of the new input among `generators`.
    pub new_index: usize,
}

/// Interreduces `G` to the reduced basis `B`, re-indexes it as `e_1..e_|B|`
/// (the new input takes the greatest index under the order's direction) and
/// seeds `H` with the Koszul signatures of every pair of new generators.
pub fn interreduce_and_reset(
    ring: &Ring,
    g: &[SigPoly],
    next_input: &Polynomial,
    kind: ModuleOrderKind,
    legacy: bool,
    stats: &mut RunStats,
) -> Result<Reset> {
    let mut scratch = RunStats::default();
    let polys: Vec<Polynomial> = g.iter().map(|e| e.poly.clone()).collect();
    let b = reduce_gb(ring, &polys, &mut scratch);
    stats.interred_reduction_steps += scratch.s_reduction_steps;
    stats.interred_multiplications += scratch.multiplications;
    let (generators, new_index) = if legacy {
        let mut v = vec![next_input.clone()];
        v.extend(b.iter().cloned());
        (v, 1)
    } else {
        let mut v = b.clone();
        v.push(next_input.clone());
        let n = v.len();
        (v, n)
    };
    let order = ModuleOrder::new(kind, &generators)?.with_legacy_index_direction(legacy);
    let mut basis = SigBasis::new();
    let nv = ring.nvars();
    for (i, p) in generators.iter().enumerate() {
        if i + 1 != new_index {
            basis.push(Signature::unit(nv, i + 1), p.clone());
        }
    }
    let syz = koszul_init(&generators, &order);
    Ok(Reset {
        generators,
        order,
        basis,
        syzygies: syz,
        new_index,
    })
}

fn run_f5c(ring: &Ring, inputs: &[Polynomial], cfg: &EngineConfig) -> Result<SigRun> {
    if cfg.module_order != ModuleOrderKind::Pot {
        return Err(Error::InvalidArgument("incremental interreduction requires the pot order".into()));
    }
    let legacy = cfg.legacy_index_direction;
    let seq: Vec<Polynomial> = if legacy {
        inputs.iter().rev().cloned().collect()
    } else {
        inputs.to_vec()
    };
    let first = vec![seq[0].clone()];
    let mut lp = Loop {
        ring,
        order: ModuleOrder::new(cfg.module_order, &first)?.with_legacy_index_direction(legacy),
        gens: first,
        cfg,
        g: SigBasis::new(),
        h: SyzygySet::new(),
        stats: RunStats::default(),
        trace: Vec::new(),
    };
    let mut queue = PairQueue::new(cfg.pair_policy);
    queue.push(QueueItem::Unit(1), &lp.order, &lp.g);
    lp.run(&mut queue);
    for f in &seq[1..] {
        let reset = interreduce_and_reset(ring, lp.g.elems(), f, cfg.module_order, legacy, &mut lp.stats)?;
        lp.gens = reset.generators;
        lp.order = reset.order;
        lp.g = reset.basis;
        lp.h = reset.syzygies;
        let mut queue = PairQueue::new(cfg.pair_policy);
        queue.push(QueueItem::Unit(reset.new_index), &lp.order, &lp.g);
        lp.run(&mut queue);
    }
    Ok(finish(lp))
}

fn prepare(ring: &Ring, inputs: &[Polynomial], cfg: &EngineConfig) -> Result<Vec<Polynomial>> {
    check_inputs(inputs)?;
    if inputs.is_empty() {
        return Err(Error::InvalidArgument("no generators".into()));
    }
    if cfg.module_order == ModuleOrderKind::Ext1 {
        let mut scratch = RunStats::default();
        return Ok(interreduce(ring, inputs, &mut scratch));
    }
    Ok(inputs.to_vec())
}

/// Algorithm 1: reduces every regular S-pair, discarding singular-top-reducible results.
pub fn gen_sb(ring: &Ring, inputs: &[Polynomial], cfg: &EngineConfig) -> Result<SigRun> {
    let cfg = EngineConfig {
        algorithm: Algorithm::GenSb,
        ..cfg.clone()
    };
    let inputs = prepare(ring, inputs, &cfg)?;
    run_plain(ring, &inputs, &cfg)
}

/// Algorithm 2: the rewrite basis loop, optionally with F5C resets.
pub fn rb(ring: &Ring, inputs: &[Polynomial], cfg: &EngineConfig) -> Result<SigRun> {
    let cfg = EngineConfig {
        algorithm: Algorithm::Rb,
        ..cfg.clone()
    };
    let inputs = prepare(ring, inputs, &cfg)?;
    if cfg.incremental_interreduce {
        run_f5c(ring, &inputs, &cfg)
    } else {
        run_plain(ring, &inputs, &cfg)
    }
}

/// Dispatches on `cfg.algorithm`.
pub fn compute(ring: &Ring, inputs: &[Polynomial], cfg: &EngineConfig) -> Result<SigRun> {
    match cfg.algorithm {
        Algorithm::GenSb => gen_sb(ring, inputs, cfg),
        Algorithm::Rb => rb(ring, inputs, cfg),
        Algorithm::F4Rb => {
            let inputs = prepare(ring, inputs, cfg)?;
            crate::f4engine::f4rb(ring, &inputs, cfg)
        }
    }
}
