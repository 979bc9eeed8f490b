//! Linear-algebra s-reduction.
//!
//! Two drivers share one swap-free elimination routine:
//!
//! * [`f4rb`] batches S-pairs, completes each batch with signature-respecting
//!   symbolic preprocessing and reads new basis elements off the echelon form.
//! * [`matrixf5`] builds full Macaulay matrices degree by degree for homogeneous
//!   input.
//!
//! Rows are labelled by signatures and a row is only ever reduced by rows of
//! strictly smaller signature. Products that the polynomial engine would queue
//! as new S-pairs of higher signature show up here as reducer rows whose lead
//! term changes during elimination; they are extracted like any other row.

use std::cmp::Ordering;
use std::collections::{BinaryHeap, HashMap, HashSet};

use crate::base::{grevlex, Field, FieldElement, Monomial};
use crate::engine::{EngineConfig, Loop, PairQueue, QueueItem, RunStats, SigRun};
use crate::error::{Error, Result};
use crate::poly::{Polynomial, ReductionMode, Ring, Term};
use crate::sigcore::{koszul_init, RewriteOrder, SigBasis, SyzygySet};
use crate::sigspace::{ModuleOrder, ModuleOrderKind, Signature};

/// One sparse row: column positions ascending, i.e. monomials decreasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixRow {
    pub sig: Signature,
    pub entries: Vec<(u32, FieldElement)>,
}

impl MatrixRow {
    pub fn lead_col(&self) -> Option<u32> {
        self.entries.first().map(|e| e.0)
    }
}

/// Signature-labelled coefficient matrix. Rows are stored top to bottom by
/// decreasing signature; columns by decreasing monomial.
#[derive(Debug, Clone)]
pub struct SigMatrix {
    pub columns: Vec<Monomial>,
    pub rows: Vec<MatrixRow>,
}

#[derive(Clone, PartialEq, Eq)]
struct Desc(Monomial);

impl Ord for Desc {
    fn cmp(&self, other: &Self) -> Ordering {
        grevlex(&self.0, &other.0)
    }
}
impl PartialOrd for Desc {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl SigMatrix {
    /// Builds the matrix over the union of row supports plus `extra_columns`.
    pub fn from_rows(mut rows: Vec<(Signature, Polynomial)>, extra_columns: &[Monomial], order: &ModuleOrder) -> Self {
        let mut cols: HashSet<Monomial> = extra_columns.iter().cloned().collect();
        for (_, p) in &rows {
            cols.extend(p.terms().iter().map(|t| t.mon.clone()));
        }
        let mut columns: Vec<Monomial> = cols.into_iter().collect();
        columns.sort_by(|a, b| grevlex(b, a));
        let pos: HashMap<&Monomial, u32> = columns.iter().enumerate().map(|(i, m)| (m, i as u32)).collect();
        rows.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let rows = rows
            .into_iter()
            .map(|(sig, p)| MatrixRow {
                sig,
                entries: p.terms().iter().map(|t| (pos[&t.mon], t.coef)).collect(),
            })
            .collect();
        SigMatrix { columns, rows }
    }

    /// `(rows, columns)`.
    pub fn dims(&self) -> (usize, usize) {
        (self.rows.len(), self.columns.len())
    }

    pub fn row_poly(&self, i: usize) -> Polynomial {
        Polynomial::from_sorted(
            self.rows[i]
                .entries
                .iter()
                .map(|&(c, v)| Term {
                    coef: v,
                    mon: self.columns[c as usize].clone(),
                })
                .collect(),
        )
    }

    fn lead_monomial(&self, i: usize) -> Option<Monomial> {
        self.rows[i].lead_col().map(|c| self.columns[c as usize].clone())
    }
}

/// Swap-free echelon form. Rows are processed from the bottom (smallest
/// signature) upwards; each is reduced only by already processed rows, which
/// all carry smaller signatures. Nonzero rows end up monic.
pub fn echelonize_no_swap(m: &SigMatrix, field: &Field, order: &ModuleOrder, mode: ReductionMode, stats: &mut RunStats) -> SigMatrix {
    let ncols = m.columns.len();
    let mut pivot: Vec<Option<usize>> = vec![None; ncols];
    let mut out: Vec<MatrixRow> = m.rows.clone();
    let mut dense: Vec<FieldElement> = vec![0; ncols];
    for i in (0..out.len()).rev() {
        if out[i].entries.is_empty() {
            continue;
        }
        for &(c, v) in &out[i].entries {
            dense[c as usize] = v;
        }
        let start = out[i].entries[0].0 as usize;
        let mut lead: Option<usize> = None;
        for c in start..ncols {
            let v = dense[c];
            if v == 0 {
                continue;
            }
            match pivot[c] {
                Some(p) => {
                    debug_assert_eq!(order.cmp(&out[p].sig, &out[i].sig), Ordering::Less);
                    let factor = field.neg(v);
                    for &(pc, pv) in &out[p].entries {
                        let d = &mut dense[pc as usize];
                        *d = field.add(*d, field.mul(factor, pv));
                    }
                    debug_assert_eq!(dense[c], 0);
                    stats.s_reduction_steps += 1;
                    stats.multiplications += out[p].entries.len() as u64;
                }
                None => {
                    if lead.is_none() {
                        lead = Some(c);
                        if mode == ReductionMode::Top {
                            break;
                        }
                    }
                }
            }
        }
        let mut entries = Vec::new();
        let from = lead.unwrap_or(ncols);
        for c in start..ncols {
            if dense[c] != 0 {
                if c >= from {
                    entries.push((c as u32, dense[c]));
                }
                dense[c] = 0;
            }
        }
        if let Some(l) = lead {
            let inv = field.inv(entries[0].1).expect("nonzero lead");
            if inv != 1 {
                for e in entries.iter_mut() {
                    e.1 = field.mul(e.1, inv);
                }
            }
            pivot[l] = Some(i);
        }
        out[i].entries = entries;
    }
    SigMatrix {
        columns: m.columns.clone(),
        rows: out,
    }
}

/// A row before elimination.
#[derive(Debug, Clone)]
pub struct PreRow {
    pub sig: Signature,
    pub poly: Polynomial,
    /// Input rows `e_i` count as new whatever happens to their lead.
    pub always_new: bool,
}

/// Adds, for every monomial occurring in the rows, the signature-minimal
/// non-rewritable multiple of a basis element with that lead (the
/// signature-minimal multiple if all are rewritable), unless a row of
/// that signature is already present. Monomials that are already row leads
/// are included: the existing row may carry a signature too large to reduce
/// the rows that contain the monomial further down. Returns the number of
/// rows added.
pub fn symbolic_preprocess(
    rows: &mut Vec<PreRow>,
    g: &SigBasis,
    h: &SyzygySet,
    rw: RewriteOrder,
    order: &ModuleOrder,
    field: &Field,
) -> usize {
    let mut sigs: HashSet<Signature> = rows.iter().map(|r| r.sig.clone()).collect();
    let mut seen: HashSet<Monomial> = HashSet::new();
    let mut todo: BinaryHeap<Desc> = BinaryHeap::new();
    for r in rows.iter() {
        for t in r.poly.terms() {
            if seen.insert(t.mon.clone()) {
                todo.push(Desc(t.mon.clone()));
            }
        }
    }
    let mut added = 0;
    while let Some(Desc(m)) = todo.pop() {
        let mut best: Option<(Signature, Monomial, usize)> = None;
        let mut fallback: Option<(Signature, Monomial, usize)> = None;
        for (k, e) in g.elems().iter().enumerate() {
            if !e.lm().divides(&m) {
                continue;
            }
            let c = e.lm().quotient_of(&m);
            let s = e.sig.mul(&c);
            if fallback.as_ref().is_none_or(|b| order.cmp(&s, &b.0) == Ordering::Less) {
                fallback = Some((s.clone(), c.clone(), k));
            }
            if best.as_ref().is_some_and(|b| order.cmp(&s, &b.0) != Ordering::Less) {
                continue;
            }
            if g.is_rewritable(&c, k, h, rw) {
                continue;
            }
            best = Some((s, c, k));
        }
        let Some((s, c, k)) = best.or(fallback) else { continue };
        if !sigs.insert(s.clone()) {
            continue;
        }
        let poly = g.get(k).poly.mul_term(field, 1, &c).monic(field);
        for t in poly.terms() {
            if seen.insert(t.mon.clone()) {
                todo.push(Desc(t.mon.clone()));
            }
        }
        rows.push(PreRow {
            sig: s,
            poly,
            always_new: false,
        });
        added += 1;
    }
    added
}

/// A row of the echelon form that enters `G` (nonzero) or `H` (zero).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewElement {
    pub sig: Signature,
    pub poly: Polynomial,
}

/// Rows whose lead monomial changed during elimination (or input rows),
/// sorted by increasing signature.
pub fn extract_new_elements(n: &SigMatrix, before: &HashMap<Signature, (Option<Monomial>, bool)>, order: &ModuleOrder) -> Vec<NewElement> {
    let mut out = Vec::new();
    for i in 0..n.rows.len() {
        let sig = &n.rows[i].sig;
        let (old_lead, always) = before.get(sig).cloned().unwrap_or((None, true));
        let new_lead = n.lead_monomial(i);
        if always || new_lead != old_lead {
            out.push(NewElement {
                sig: sig.clone(),
                poly: n.row_poly(i),
            });
        }
    }
    out.sort_by(|a, b| order.cmp(&a.sig, &b.sig));
    out
}

/// Takes every queued item of minimal batch key (signature degree for
/// degree-compatible orders).
pub fn select_pairs(queue: &mut PairQueue, order: &ModuleOrder) -> Vec<QueueItem> {
    queue.pop_batch(order)
}

/// Algorithm 4: RB with matrix reduction of whole batches.
pub fn f4rb(ring: &Ring, inputs: &[Polynomial], cfg: &EngineConfig) -> Result<SigRun> {
    let field = ring.field;
    let order = ModuleOrder::new(cfg.module_order, inputs)?.with_legacy_index_direction(cfg.legacy_index_direction);
    let h = SyzygySet::new();
    let mut lp = Loop {
        ring,
        gens: inputs.to_vec(),
        order,
        cfg,
        g: SigBasis::new(),
        h,
        stats: RunStats::default(),
        trace: Vec::new(),
    };
    let mut queue = PairQueue::new(cfg.pair_policy);
    for i in 1..=inputs.len() {
        queue.push(QueueItem::Unit(i), &lp.order, &lp.g);
    }
    let nv = ring.nvars();
    loop {
        let batch = select_pairs(&mut queue, &lp.order);
        if batch.is_empty() {
            break;
        }
        let mut rows: Vec<PreRow> = Vec::new();
        let mut sigs: HashSet<Signature> = HashSet::new();
        let mut taken: Vec<(Signature, QueueItem)> = Vec::new();
        for item in batch {
            if lp.item_rewritable(&item) {
                continue;
            }
            taken.push((item.sig(nv), item.clone()));
            match &item {
                QueueItem::Unit(i) => {
                    let sig = Signature::unit(nv, *i);
                    if sigs.insert(sig.clone()) {
                        rows.push(PreRow {
                            sig,
                            poly: lp.gens[*i - 1].monic(&field),
                            always_new: true,
                        });
                    }
                }
                QueueItem::Pair(sp) => {
                    for (mult, k) in [(&sp.big_mult, sp.big), (&sp.small_mult, sp.small)] {
                        let e = lp.g.get(k);
                        let sig = e.sig.mul(mult);
                        if sigs.insert(sig.clone()) {
                            rows.push(PreRow {
                                sig,
                                poly: e.poly.mul_term(&field, 1, mult),
                                always_new: false,
                            });
                        }
                    }
                }
            }
        }
        if rows.is_empty() {
            continue;
        }
        symbolic_preprocess(&mut rows, &lp.g, &lp.h, cfg.rewrite, &lp.order, &field);
        let before: HashMap<Signature, (Option<Monomial>, bool)> = rows
            .iter()
            .map(|r| (r.sig.clone(), (r.poly.lead().map(|t| t.mon.clone()), r.always_new)))
            .collect();
        let m = SigMatrix::from_rows(rows.into_iter().map(|r| (r.sig, r.poly)).collect(), &[], &lp.order);
        let n = echelonize_no_swap(&m, &field, &lp.order, cfg.reduction_mode, &mut lp.stats);
        // A new element may queue pairs below rows of this batch, which were
        // then reduced without it. Those rows are dropped and their items
        // queued again.
        let mark = queue.mark();
        let mut cut: Option<Signature> = None;
        for ne in extract_new_elements(&n, &before, &lp.order) {
            if cut.as_ref().is_some_and(|c| lp.order.cmp(&ne.sig, c) != Ordering::Less) {
                break;
            }
            if ne.poly.is_zero() {
                lp.stats.zero_reductions += 1;
                lp.h.insert(ne.sig);
                continue;
            }
            if lp.g.elems().iter().any(|e| e.sig == ne.sig) {
                continue;
            }
            lp.insert(ne.sig, ne.poly, &mut queue);
            cut = queue.min_sig_since(mark, &lp.order);
        }
        if let Some(c) = cut {
            for (s, item) in taken {
                if lp.order.cmp(&s, &c) != Ordering::Less {
                    queue.push(item, &lp.order, &lp.g);
                }
            }
        }
    }
    let crate::engine::Loop {
        gens,
        order,
        g,
        h,
        stats,
        trace,
        ..
    } = lp;
    let basis = g.into_elems();
    let stats = crate::engine::run_stats_finalize(&basis, &h, stats);
    Ok(SigRun {
        generators: gens,
        order,
        basis,
        syzygies: h,
        stats,
        trace,
    })
}

/// One degree of the Macaulay-matrix computation.
#[derive(Debug, Clone)]
pub struct MatrixF5Step {
    pub degree: u32,
    /// `(rows, columns)` after deleting predictably-syzygy rows.
    pub dims: (usize, usize),
    pub deleted_rows: Vec<Signature>,
    /// Echelonized rows, top (largest signature) to bottom.
    pub reduced: Vec<(Signature, Polynomial)>,
    /// Rows whose lead changed, plus input rows.
    pub new_elements: Vec<(Signature, Polynomial)>,
}

/// Degree-stepping state.
#[derive(Debug, Clone)]
pub struct MatrixF5State {
    pub gens: Vec<Polynomial>,
    pub order: ModuleOrder,
    pub syzygies: SyzygySet,
    /// Every nonzero reduced row so far, by signature index.
    rows: Vec<Vec<(Monomial, Polynomial)>>,
    pub basis: Vec<(Signature, Polynomial)>,
    pub stats: RunStats,
    pub steps: Vec<MatrixF5Step>,
}

impl MatrixF5State {
    pub fn new(inputs: &[Polynomial], kind: ModuleOrderKind) -> Result<Self> {
        if inputs.iter().any(|f| f.is_zero()) {
            return Err(Error::ZeroOperand);
        }
        if let Some(k) = inputs.iter().position(|f| !f.is_homogeneous()) {
            return Err(Error::RequiresHomogeneous(k + 1));
        }
        let order = ModuleOrder::new(kind, inputs)?;
        let syzygies = koszul_init(inputs, &order);
        Ok(MatrixF5State {
            gens: inputs.to_vec(),
            order,
            syzygies,
            rows: vec![Vec::new(); inputs.len()],
            basis: Vec::new(),
            stats: RunStats::default(),
            steps: Vec::new(),
        })
    }
}

/// All monomials of total degree `d` in `n` variables, decreasing in grevlex.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == n {
            cur[i] = left;
            out.push(Monomial::new(cur).unwrap());
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e;
            rec(n, i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    rec(n, 0, d, &mut vec![0; n], &mut out);
    out.sort_by(|a, b| grevlex(b, a));
    out
}

/// Builds, echelonizes and harvests the degree-`d` Macaulay matrix.
pub fn matrixf5_step(ring: &Ring, state: &mut MatrixF5State, d: u32, mode: ReductionMode) {
    let field = ring.field;
    let nv = ring.nvars();
    let mut rows: Vec<(Signature, Polynomial)> = Vec::new();
    let mut deleted = Vec::new();
    let mut before: HashMap<Signature, (Option<Monomial>, bool)> = HashMap::new();
    for (k, f) in state.gens.iter().enumerate() {
        let df = f.degree();
        if df > d {
            continue;
        }
        for t in monomials_of_degree(nv, d - df) {
            let sig = Signature::new(t.clone(), k + 1);
            if state.syzygies.divides(&sig) {
                deleted.push(sig);
                continue;
            }
            // Rewrite through the most recent stored row whose signature divides.
            let mut best: Option<&(Monomial, Polynomial)> = None;
            for r in &state.rows[k] {
                if r.0.divides(&t) && best.is_none_or(|b| grevlex(&r.0, &b.0) == Ordering::Greater) {
                    best = Some(r);
                }
            }
            let poly = match best {
                Some((u, p)) => p.mul_term(&field, 1, &u.quotient_of(&t)),
                None => f.monic(&field),
            };
            before.insert(sig.clone(), (poly.lead().map(|x| x.mon.clone()), t.is_one()));
            rows.push((sig, poly));
        }
    }
    let cols = monomials_of_degree(nv, d);
    let m = SigMatrix::from_rows(rows, &cols, &state.order);
    let dims = m.dims();
    let n = echelonize_no_swap(&m, &field, &state.order, mode, &mut state.stats);
    let mut reduced = Vec::with_capacity(n.rows.len());
    for i in 0..n.rows.len() {
        let sig = n.rows[i].sig.clone();
        let p = n.row_poly(i);
        if p.is_zero() {
            state.stats.zero_reductions += 1;
            state.syzygies.insert(sig.clone());
        } else {
            state.rows[sig.index - 1].push((sig.mon.clone(), p.clone()));
        }
        reduced.push((sig, p));
    }
    let new_elements: Vec<(Signature, Polynomial)> = extract_new_elements(&n, &before, &state.order)
        .into_iter()
        .filter(|e| !e.poly.is_zero())
        .map(|e| (e.sig, e.poly))
        .collect();
    state.basis.extend(new_elements.iter().cloned());
    state.stats.basis_size = state.basis.len() as u64;
    state.stats.syzygy_count = state.syzygies.entered() as u64;
    state.stats.syzygy_count_pruned = state.syzygies.len() as u64;
    state.steps.push(MatrixF5Step {
        degree: d,
        dims,
        deleted_rows: deleted,
        reduced,
        new_elements,
    });
}

/// Runs [`matrixf5_step`] for every degree from the smallest input degree up to `bound`.
pub fn matrixf5(ring: &Ring, inputs: &[Polynomial], kind: ModuleOrderKind, bound: u32, mode: ReductionMode) -> Result<MatrixF5State> {
    let mut state = MatrixF5State::new(inputs, kind)?;
    let lo = inputs.iter().map(|f| f.degree()).min().unwrap_or(0);
    for d in lo..=bound {
        matrixf5_step(ring, &mut state, d, mode);
    }
    Ok(state)
}
