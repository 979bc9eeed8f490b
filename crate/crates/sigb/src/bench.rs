//! Benchmark systems, the text format for systems and the run/table plumbing
//! behind the `sigb` binary.
//!
//! Named families (variables `x1..xn` unless noted):
//!
//! * `cyclic-n`: `sum_i prod_{j<k} x_{(i+j) mod n}` for `k = 1..n-1`, plus `x1*..*xn - 1`.
//! * `katsura-n`: variables `u0..un`, with `u_{-l} = u_l` and `u_l = 0` for `l > n`;
//!   first `sum_{l=-n}^{n} u_l - 1`, then `sum_{l=-n}^{n} u_l*u_{m-l} - u_m` for `m = 0..n-1`.
//! * `eco-n`: `(x_k + sum_{i=1}^{n-k-1} x_i*x_{i+k})*x_n - k` for `k = 1..n-1`,
//!   plus `x1 + .. + x_{n-1} + 1`.
//! * `noon-n`: `10*x_i*sum_{j != i} x_j^2 - 11*x_i + 10` for `i = 1..n`.

use std::fmt::Write as _;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::base::{Field, Monomial, DEFAULT_PRIME};
use crate::engine::{compute, Algorithm, EngineConfig, RunStats};
use crate::error::{Error, Result};
use crate::f4engine::monomials_of_degree;
use crate::oracle::{buchberger, verify_equivalence, BuchbergerConfig};
use crate::poly::{Polynomial, ReductionMode, Ring};
use crate::sigcore::RewriteOrder;
use crate::sigspace::ModuleOrderKind;

/// Where a system came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Named { name: String, n: usize },
    File,
    Random { seed: u64, dmin: u32, dmax: u32, homogeneous: bool },
}

/// A polynomial system together with its ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemSpec {
    pub ring: Ring,
    pub gens: Vec<Polynomial>,
    pub provenance: Provenance,
}

impl SystemSpec {
    pub fn characteristic(&self) -> u32 {
        self.ring.field.characteristic()
    }

    pub fn vars(&self) -> &[String] {
        &self.ring.vars
    }

    /// Short label used in tables.
    pub fn label(&self) -> String {
        match &self.provenance {
            Provenance::Named { name, n } => format!("{name}-{n}"),
            Provenance::File => "file".into(),
            Provenance::Random { homogeneous, dmin, dmax, seed } => {
                let kind = if *homogeneous { "hrandom" } else { "random" };
                format!("{kind}({},{dmin},{dmax})#{seed}", self.gens.len())
            }
        }
    }
}

fn poly_from(ring: &Ring, terms: Vec<(i64, Vec<u32>)>) -> Polynomial {
    Polynomial::from_terms(
        &ring.field,
        terms.into_iter().map(|(c, e)| (c, Monomial::new(&e).expect("small exponents"))).collect(),
    )
}

fn unit_exps(n: usize, idx: &[usize]) -> Vec<u32> {
    let mut e = vec![0; n];
    for &i in idx {
        e[i] += 1;
    }
    e
}

fn cyclic(n: usize) -> (Vec<String>, Vec<Vec<(i64, Vec<u32>)>>) {
    let vars = (1..=n).map(|i| format!("x{i}")).collect();
    let mut gens = Vec::new();
    for k in 1..n {
        let terms = (0..n)
            .map(|i| (1, unit_exps(n, &(0..k).map(|j| (i + j) % n).collect::<Vec<_>>())))
            .collect();
        gens.push(terms);
    }
    gens.push(vec![(1, vec![1; n]), (-1, vec![0; n])]);
    (vars, gens)
}

fn katsura(n: usize) -> (Vec<String>, Vec<Vec<(i64, Vec<u32>)>>) {
    let nv = n + 1;
    let vars = (0..nv).map(|i| format!("u{i}")).collect();
    let idx = |l: i64| -> Option<usize> {
        let a = l.unsigned_abs() as usize;
        (a <= n).then_some(a)
    };
    let mut gens = Vec::new();
    let mut lin: Vec<(i64, Vec<u32>)> = (-(n as i64)..=n as i64).map(|l| (1, unit_exps(nv, &[idx(l).unwrap()]))).collect();
    lin.push((-1, vec![0; nv]));
    gens.push(lin);
    for m in 0..n as i64 {
        let mut t = Vec::new();
        for l in -(n as i64)..=n as i64 {
            if let (Some(a), Some(b)) = (idx(l), idx(m - l)) {
                t.push((1, unit_exps(nv, &[a, b])));
            }
        }
        t.push((-1, unit_exps(nv, &[m as usize])));
        gens.push(t);
    }
    (vars, gens)
}

fn eco(n: usize) -> (Vec<String>, Vec<Vec<(i64, Vec<u32>)>>) {
    let vars = (1..=n).map(|i| format!("x{i}")).collect();
    let last = n - 1;
    let mut gens = Vec::new();
    for k in 1..n {
        let mut t = vec![(1, unit_exps(n, &[k - 1, last]))];
        for i in 1..n - k {
            t.push((1, unit_exps(n, &[i - 1, i + k - 1, last])));
        }
        t.push((-(k as i64), vec![0; n]));
        gens.push(t);
    }
    let mut t: Vec<(i64, Vec<u32>)> = (0..last).map(|i| (1, unit_exps(n, &[i]))).collect();
    t.push((1, vec![0; n]));
    gens.push(t);
    (vars, gens)
}

fn noon(n: usize) -> (Vec<String>, Vec<Vec<(i64, Vec<u32>)>>) {
    let vars = (1..=n).map(|i| format!("x{i}")).collect();
    let gens = (0..n)
        .map(|i| {
            let mut t: Vec<(i64, Vec<u32>)> = (0..n).filter(|&j| j != i).map(|j| (10, unit_exps(n, &[i, j, j]))).collect();
            t.push((-11, unit_exps(n, &[i])));
            t.push((10, vec![0; n]));
            t
        })
        .collect();
    (vars, gens)
}

/// One of the standard families `cyclic`, `eco`, `katsura`, `noon` over GF(32003).
pub fn gen_named(name: &str, n: usize) -> Result<SystemSpec> {
    let build = match name {
        "cyclic" => cyclic,
        "katsura" => katsura,
        "eco" => eco,
        "noon" => noon,
        _ => return Err(Error::UnknownSystem(name.to_string())),
    };
    if n < 2 {
        return Err(Error::InvalidArgument(format!("{name}-{n}: n must be at least 2")));
    }
    let (vars, gens) = build(n);
    let ring = Ring::new(Field::new(DEFAULT_PRIME)?, vars);
    let gens = gens.into_iter().map(|t| poly_from(&ring, t)).collect();
    Ok(SystemSpec {
        ring,
        gens,
        provenance: Provenance::Named { name: name.to_string(), n },
    })
}

/// `n` dense polynomials in `n` variables with nonzero coefficients, one
/// degree per polynomial drawn from `dmin..=dmax`. Affine systems use every
/// monomial up to that degree, homogeneous ones only those of that degree.
pub fn gen_random(n: usize, dmin: u32, dmax: u32, seed: u64, homogeneous: bool) -> Result<SystemSpec> {
    if n == 0 || dmin < 1 || dmin > dmax {
        return Err(Error::InvalidArgument(format!("random({n},{dmin},{dmax})")));
    }
    let field = Field::new(DEFAULT_PRIME)?;
    let ring = Ring::with_nvars(field, n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = field.characteristic() as i64;
    let gens = (0..n)
        .map(|_| {
            let d = rng.gen_range(dmin..=dmax);
            let lo = if homogeneous { d } else { 0 };
            let terms = (lo..=d)
                .rev()
                .flat_map(|k| monomials_of_degree(n, k))
                .map(|m| (rng.gen_range(1..p), m))
                .collect();
            Polynomial::from_terms(&field, terms)
        })
        .collect();
    Ok(SystemSpec {
        ring,
        gens,
        provenance: Provenance::Random {
            seed,
            dmin,
            dmax,
            homogeneous,
        },
    })
}

/// Standard homogenization with a new last variable `h`.
pub fn homogenize(spec: &SystemSpec) -> SystemSpec {
    let mut vars = spec.ring.vars.clone();
    let mut name = "h".to_string();
    while vars.contains(&name) {
        name.push('_');
    }
    vars.push(name);
    let ring = Ring::new(spec.ring.field, vars);
    let gens = spec
        .gens
        .iter()
        .map(|f| {
            let d = f.degree();
            let terms = f
                .terms()
                .iter()
                .map(|t| {
                    let mut e: Vec<u32> = t.mon.exps().iter().map(|&x| x as u32).collect();
                    e.push(d - t.mon.degree());
                    (ring.field.to_signed(t.coef), Monomial::new(&e).expect("degree fits"))
                })
                .collect();
            Polynomial::from_terms(&ring.field, terms)
        })
        .collect();
    SystemSpec {
        ring,
        gens,
        provenance: spec.provenance.clone(),
    }
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
    line: usize,
}

impl Cursor<'_> {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::ParseError {
            line: self.line,
            col: self.pos + 1,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse::<i64>()
            .map_err(|_| Error::ParseError {
                line: self.line,
                col: start + 1,
                msg: "number too large".into(),
            })
    }

    fn ident(&mut self) -> Option<(usize, &str)> {
        self.skip_ws();
        let start = self.pos;
        if self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphabetic() || self.s[self.pos] == b'_') {
            self.pos += 1;
            while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_') {
                self.pos += 1;
            }
            return Some((start, std::str::from_utf8(&self.s[start..self.pos]).unwrap()));
        }
        None
    }
}

fn parse_line(ring: &Ring, text: &str, line: usize) -> Result<Polynomial> {
    let mut c = Cursor {
        s: text.as_bytes(),
        pos: 0,
        line,
    };
    let n = ring.nvars();
    let mut terms: Vec<(i64, Monomial)> = Vec::new();
    let mut first = true;
    loop {
        let mut sign = 1i64;
        match c.peek() {
            None if first => return Err(c.err("empty polynomial")),
            None => break,
            Some(b'+') if !first => c.pos += 1,
            Some(b'-') => {
                c.pos += 1;
                sign = -1;
            }
            Some(_) if first => {}
            Some(_) => return Err(c.err("expected `+` or `-`")),
        }
        first = false;
        let mut coef = 1i64;
        let mut exps = vec![0u32; n];
        let mut factors = 0;
        if c.peek().is_some_and(|b| b.is_ascii_digit()) {
            coef = c.number()?;
            factors += 1;
        }
        loop {
            if factors > 0 {
                match c.peek() {
                    Some(b'*') => c.pos += 1,
                    // `3x` is read as `3*x`
                    Some(b) if factors == 1 && (b.is_ascii_alphabetic() || b == b'_') => {}
                    _ => break,
                }
            }
            let Some((start, name)) = c.ident() else {
                if c.peek().is_some_and(|b| b.is_ascii_digit()) {
                    coef = coef.checked_mul(c.number()?).ok_or_else(|| c.err("coefficient too large"))?;
                    factors += 1;
                    continue;
                }
                return Err(c.err("expected a variable or coefficient"));
            };
            let Some(v) = ring.vars.iter().position(|x| x == name) else {
                let _ = start;
                return Err(Error::UnknownVariable(name.to_string()));
            };
            let mut e = 1u32;
            if c.peek() == Some(b'^') {
                c.pos += 1;
                e = u32::try_from(c.number()?).map_err(|_| c.err("exponent too large"))?;
            }
            exps[v] = exps[v].checked_add(e).ok_or(Error::DegreeOverflow)?;
            factors += 1;
        }
        let m = Monomial::new(&exps)?;
        let p = ring.field.characteristic() as i64;
        terms.push((sign * (coef % p), m));
    }
    let poly = Polynomial::from_terms(&ring.field, terms);
    if poly.is_zero() {
        return Err(Error::ParseError {
            line,
            col: 1,
            msg: "polynomial is zero".into(),
        });
    }
    Ok(poly)
}

/// Parses one polynomial in the ring's variables.
pub fn parse_polynomial(ring: &Ring, text: &str) -> Result<Polynomial> {
    parse_line(ring, text, 1)
}

/// Parses `p <prime>`, `vars a,b,..` and one polynomial per line. Lines
/// starting with `#` are comments; blank lines are only allowed at the end.
pub fn parse_system(text: &str) -> Result<SystemSpec> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim_start().starts_with('#'))
        .collect();
    let last_nonblank = lines.iter().rposition(|(_, l)| !l.trim().is_empty());
    let lines = &lines[..last_nonblank.map_or(0, |k| k + 1)];
    let header = |k: usize, key: &str| -> Result<&str> {
        let Some(&(no, l)) = lines.get(k) else {
            return Err(Error::ParseError {
                line: lines.last().map_or(1, |x| x.0 + 1),
                col: 1,
                msg: format!("missing `{key}` header"),
            });
        };
        let t = l.trim_start();
        t.strip_prefix(key)
            .filter(|r| r.starts_with(char::is_whitespace))
            .map(str::trim)
            .ok_or_else(|| Error::ParseError {
                line: no,
                col: l.len() - t.len() + 1,
                msg: format!("expected `{key}`"),
            })
    };
    let p_text = header(0, "p")?;
    let p: u32 = p_text.parse().map_err(|_| Error::ParseError {
        line: lines[0].0,
        col: lines[0].1.find(p_text).unwrap_or(0) + 1,
        msg: "expected a prime".into(),
    })?;
    let field = Field::new(p)?;
    let vars: Vec<String> = header(1, "vars")?.split(',').map(|v| v.trim().to_string()).collect();
    for v in &vars {
        let ok = v.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_') && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok {
            return Err(Error::ParseError {
                line: lines[1].0,
                col: 1,
                msg: format!("bad variable name `{v}`"),
            });
        }
    }
    let ring = Ring::new(field, vars);
    let mut gens = Vec::new();
    for &(no, l) in &lines[2..] {
        if l.trim().is_empty() {
            return Err(Error::ParseError {
                line: no,
                col: 1,
                msg: "empty generator line".into(),
            });
        }
        gens.push(parse_line(&ring, l, no)?);
    }
    Ok(SystemSpec {
        ring,
        gens,
        provenance: Provenance::File,
    })
}

/// Text form read back by [`parse_system`].
pub fn emit_system(spec: &SystemSpec) -> String {
    let mut s = format!("p {}\nvars {}\n", spec.characteristic(), spec.ring.vars.join(","));
    for f in &spec.gens {
        let _ = writeln!(s, "{}", f.display(&spec.ring));
    }
    s
}

/// The engine a variant runs on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EngineKind {
    #[default]
    Rb,
    GenSb,
    F4Rb,
    Buchberger,
}

impl EngineKind {
    pub fn name(&self) -> &'static str {
        match self {
            EngineKind::Rb => "rb",
            EngineKind::GenSb => "gensb",
            EngineKind::F4Rb => "f4rb",
            EngineKind::Buchberger => "buchberger",
        }
    }
}

impl std::str::FromStr for EngineKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rb" => Ok(EngineKind::Rb),
            "gensb" => Ok(EngineKind::GenSb),
            "f4rb" => Ok(EngineKind::F4Rb),
            "buchberger" => Ok(EngineKind::Buchberger),
            _ => Err(Error::InvalidArgument(format!("unknown engine `{s}`"))),
        }
    }
}

/// One cell of the experiment grid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VariantConfig {
    pub module_order: ModuleOrderKind,
    pub rewrite: RewriteOrder,
    pub reduction: ReductionMode,
    pub engine: EngineKind,
    pub interreduce: bool,
    #[serde(default)]
    pub gvw2013: bool,
    #[serde(default)]
    pub legacy_index_direction: bool,
    #[serde(default)]
    pub verify: bool,
}

impl Default for VariantConfig {
    fn default() -> Self {
        VariantConfig {
            module_order: ModuleOrderKind::Pot,
            rewrite: RewriteOrder::Add,
            reduction: ReductionMode::Top,
            engine: EngineKind::Rb,
            interreduce: false,
            gvw2013: false,
            legacy_index_direction: false,
            verify: false,
        }
    }
}

impl VariantConfig {
    pub fn engine_config(&self) -> EngineConfig {
        EngineConfig {
            module_order: self.module_order,
            rewrite: self.rewrite,
            reduction_mode: self.reduction,
            algorithm: match self.engine {
                EngineKind::GenSb => Algorithm::GenSb,
                EngineKind::F4Rb => Algorithm::F4Rb,
                _ => Algorithm::Rb,
            },
            incremental_interreduce: self.interreduce,
            gvw2013: self.gvw2013,
            legacy_index_direction: self.legacy_index_direction,
            ..Default::default()
        }
    }

    /// Grid column label, e.g. `top/dpot/rat`.
    pub fn column(&self) -> String {
        let mut s = format!("{}/{}/{}", self.reduction.name(), self.module_order.name(), self.rewrite.name());
        if self.engine != EngineKind::Rb {
            s = format!("{}:{s}", self.engine.name());
        }
        if self.interreduce {
            s.push_str("+ir");
        }
        if self.gvw2013 {
            s.push_str("+gvw");
        }
        s
    }
}

/// Statistics of one completed run plus the configuration that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub system: String,
    pub config: VariantConfig,
    #[serde(flatten)]
    pub stats: RunStats,
    pub wall_time_ms: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
}

/// Runs one variant. With `config.verify` the result is compared against the
/// Buchberger oracle.
pub fn run_variant(spec: &SystemSpec, config: &VariantConfig) -> Result<ReportRow> {
    let wrap = |e: Error| Error::RunFailed {
        config: format!("{} {}", spec.label(), config.column()),
        cause: Box::new(e),
    };
    let start = Instant::now();
    let (stats, basis) = if config.engine == EngineKind::Buchberger {
        let mut st = RunStats::default();
        let bb = BuchbergerConfig {
            criteria: true,
            reduction_mode: config.reduction,
        };
        let g = buchberger(&spec.ring, &spec.gens, bb, &mut st).map_err(wrap)?;
        (st, g)
    } else {
        let run = compute(&spec.ring, &spec.gens, &config.engine_config()).map_err(wrap)?;
        let polys = run.polys();
        (run.stats, polys)
    };
    let wall_time_ms = start.elapsed().as_millis() as u64;
    let verified = if config.verify {
        let mut scratch = RunStats::default();
        let reference = buchberger(&spec.ring, &spec.gens, BuchbergerConfig::default(), &mut scratch).map_err(wrap)?;
        Some(verify_equivalence(&spec.ring, &basis, &reference))
    } else {
        None
    };
    Ok(ReportRow {
        system: spec.label(),
        config: config.clone(),
        stats,
        wall_time_ms,
        verified,
    })
}

/// Output format of [`emit_table`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableFormat {
    Csv,
    Md,
    Json,
}

impl std::str::FromStr for TableFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(TableFormat::Csv),
            "md" => Ok(TableFormat::Md),
            "json" => Ok(TableFormat::Json),
            _ => Err(Error::InvalidArgument(format!("unknown table format `{s}`"))),
        }
    }
}

const TABLE_STATS: [&str; 5] = ["basis_size", "syzygy_count", "zero_reductions", "log2_multiplications", "log2_s_reduction_steps"];

fn stat_cell(row: &ReportRow, stat: &str) -> String {
    let log = |v: u64| if v == 0 { "0".to_string() } else { format!("{:.3}", (v as f64).log2()) };
    match stat {
        "basis_size" => row.stats.basis_size.to_string(),
        "syzygy_count" => row.stats.syzygy_count.to_string(),
        "zero_reductions" => row.stats.zero_reductions.to_string(),
        "log2_multiplications" => log(row.stats.multiplications + row.stats.interred_multiplications),
        _ => log(row.stats.s_reduction_steps + row.stats.interred_reduction_steps),
    }
}

/// Grid layout: one line per system, one column per variant. Markdown emits
/// one table per statistic; CSV adds a leading `statistic` column; JSON is
/// the row list itself.
pub fn emit_table(rows: &[ReportRow], format: TableFormat) -> String {
    if format == TableFormat::Json {
        return serde_json::to_string_pretty(rows).expect("rows serialize");
    }
    let mut systems: Vec<String> = Vec::new();
    let mut columns: Vec<String> = Vec::new();
    for r in rows {
        if !systems.contains(&r.system) {
            systems.push(r.system.clone());
        }
        let c = r.config.column();
        if !columns.contains(&c) {
            columns.push(c);
        }
    }
    let cell = |sys: &str, col: &str, stat: &str| -> String {
        rows.iter()
            .rev()
            .find(|r| r.system == sys && r.config.column() == col)
            .map(|r| stat_cell(r, stat))
            .unwrap_or_default()
    };
    let mut out = String::new();
    match format {
        TableFormat::Csv => {
            let _ = writeln!(out, "statistic,system{}", columns.iter().map(|c| format!(",{c}")).collect::<String>());
            for stat in TABLE_STATS {
                for s in &systems {
                    let cells: String = columns.iter().map(|c| format!(",{}", cell(s, c, stat))).collect();
                    let _ = writeln!(out, "{stat},{s}{cells}");
                }
            }
        }
        TableFormat::Md => {
            for (k, stat) in TABLE_STATS.iter().enumerate() {
                if k > 0 {
                    out.push('\n');
                }
                let _ = writeln!(out, "### {stat}\n");
                let _ = writeln!(out, "| system |{}", columns.iter().map(|c| format!(" {c} |")).collect::<String>());
                let _ = writeln!(out, "|---|{}", "---:|".repeat(columns.len()));
                for s in &systems {
                    let cells: String = columns.iter().map(|c| format!(" {} |", cell(s, c, stat))).collect();
                    let _ = writeln!(out, "| {s} |{cells}");
                }
            }
        }
        TableFormat::Json => unreachable!(),
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cyclic_small() {
        let c2 = gen_named("cyclic", 2).unwrap();
        let r = &c2.ring;
        assert_eq!(c2.gens, vec![parse_polynomial(r, "x1+x2").unwrap(), parse_polynomial(r, "x1*x2-1").unwrap()]);
        let c3 = gen_named("cyclic", 3).unwrap();
        let r = &c3.ring;
        let want: Vec<Polynomial> = ["x1+x2+x3", "x1*x2+x2*x3+x3*x1", "x1*x2*x3-1"]
            .iter()
            .map(|s| parse_polynomial(r, s).unwrap())
            .collect();
        assert_eq!(c3.gens, want);
        let c7 = gen_named("cyclic", 7).unwrap();
        assert_eq!(c7.gens.iter().map(|f| f.degree()).collect::<Vec<_>>(), (1..=7).collect::<Vec<_>>());
        assert_eq!(c7.gens[2].len(), 7);
    }

    #[test]
    fn other_families() {
        let k2 = gen_named("katsura", 2).unwrap();
        let r = &k2.ring;
        let want: Vec<Polynomial> = ["u0+2*u1+2*u2-1", "u0^2+2*u1^2+2*u2^2-u0", "2*u0*u1+2*u1*u2-u1"]
            .iter()
            .map(|s| parse_polynomial(r, s).unwrap())
            .collect();
        assert_eq!(k2.gens, want);
        let e3 = gen_named("eco", 3).unwrap();
        let r = &e3.ring;
        let want: Vec<Polynomial> = ["x1*x3+x1*x2*x3-1", "x2*x3-2", "x1+x2+1"]
            .iter()
            .map(|s| parse_polynomial(r, s).unwrap())
            .collect();
        assert_eq!(e3.gens, want);
        let n2 = gen_named("noon", 2).unwrap();
        let r = &n2.ring;
        assert_eq!(n2.gens[0], parse_polynomial(r, "10*x1*x2^2-11*x1+10").unwrap());
        assert_eq!(gen_named("foo", 3).unwrap_err(), Error::UnknownSystem("foo".into()));
    }

    #[test]
    fn random_shapes() {
        let s = gen_random(6, 2, 2, 7, true).unwrap();
        assert_eq!(s.gens.len(), 6);
        for f in &s.gens {
            assert_eq!(f.len(), 21);
            assert!(f.is_homogeneous());
        }
        assert_eq!(s, gen_random(6, 2, 2, 7, true).unwrap());
        assert_ne!(s.gens, gen_random(6, 2, 2, 8, true).unwrap().gens);
        let a = gen_random(3, 2, 2, 1, false).unwrap();
        assert!(a.gens.iter().all(|f| f.len() == 10));
    }

    #[test]
    fn parse_f7_system() {
        let s = parse_system("p 7\nvars x,y,z,t\ny*z-2*t^2\nx*y+t^2\nx^2*z+3*x*t^2-2*y*t^2\n\n").unwrap();
        assert_eq!(s.characteristic(), 7);
        assert_eq!(s.vars(), ["x", "y", "z", "t"]);
        assert_eq!(s.gens.len(), 3);
        assert_eq!(s.gens[0].display(&s.ring).to_string(), "y*z-2*t^2");
        assert_eq!(emit_system(&s), "p 7\nvars x,y,z,t\ny*z-2*t^2\nx*y+t^2\nx^2*z+3*x*t^2-2*y*t^2\n");
    }

    #[test]
    fn parse_errors() {
        let e = parse_system("p 7\nvars x,y\nx+y\n\nx-y\n").unwrap_err();
        assert!(matches!(e, Error::ParseError { line: 4, .. }), "{e:?}");
        assert_eq!(parse_system("p 7\nvars x,y\nx+w\n").unwrap_err(), Error::UnknownVariable("w".into()));
        assert!(matches!(parse_system("p 7\nvars x\nx+*2\n").unwrap_err(), Error::ParseError { line: 3, col: 3, .. }));
        assert_eq!(parse_system("p 8\nvars x\nx\n").unwrap_err(), Error::NotPrime(8));
        assert!(matches!(parse_system("vars x\n").unwrap_err(), Error::ParseError { line: 1, .. }));
    }

    #[test]
    fn coefficient_forms() {
        let r = Ring::new(Field::new(7).unwrap(), vec!["x".into(), "y".into()]);
        let a = parse_polynomial(&r, "3x^2 - 2*y*3 + 9").unwrap();
        assert_eq!(a.display(&r).to_string(), "3*x^2+y+2");
        assert_eq!(parse_polynomial(&r, "x*x").unwrap(), parse_polynomial(&r, "x^2").unwrap());
    }

    #[test]
    fn homogenization() {
        let s = gen_named("cyclic", 3).unwrap();
        let h = homogenize(&s);
        assert_eq!(h.ring.vars.last().unwrap(), "h");
        assert_eq!(h.gens[2], parse_polynomial(&h.ring, "x1*x2*x3-h^3").unwrap());
        assert!(h.gens.iter().all(|f| f.is_homogeneous()));
    }

    #[test]
    fn table_formats() {
        assert_eq!(emit_table(&[], TableFormat::Md).lines().filter(|l| l.starts_with("| system")).count(), TABLE_STATS.len());
        assert_eq!(emit_table(&[], TableFormat::Csv), "statistic,system\n");
        let spec = gen_named("cyclic", 4).unwrap();
        let rows: Vec<ReportRow> = [RewriteOrder::Add, RewriteOrder::Rat]
            .into_iter()
            .map(|rw| {
                run_variant(
                    &spec,
                    &VariantConfig {
                        module_order: ModuleOrderKind::Dpot,
                        rewrite: rw,
                        verify: true,
                        ..Default::default()
                    },
                )
                .unwrap()
            })
            .collect();
        assert!(rows.iter().all(|r| r.verified == Some(true)));
        let json = emit_table(&rows, TableFormat::Json);
        let back: Vec<ReportRow> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, rows);
        let md = emit_table(&rows, TableFormat::Md);
        assert!(md.contains("| cyclic-4 |"));
        assert!(md.contains("top/dpot/rat"));
    }

    proptest! {
        #[test]
        fn emit_parse_round_trip(seed in 0u64..1000, n in 2usize..4, hom in any::<bool>()) {
            let s = gen_random(n, 1, 3, seed, hom).unwrap();
            let text = emit_system(&s);
            let back = parse_system(&text).unwrap();
            prop_assert_eq!(&back.gens, &s.gens);
            prop_assert_eq!(emit_system(&back), text);
        }
    }
}
