//! Report builders behind the file-driven subcommands: Betti tables by a
//! chosen engine, Tor product tables, torus-representation summaries, and
//! the combined invariants panel. Every report has a canonical JSON form;
//! text and TSV are derived views of the same data.

use clap::ValueEnum;
use serde_json::{json, Value};
use topo_core::error::Error;
use topo_core::{
    betti_hochster, betti_hochster_multigraded, betti_koszul, betti_koszul_multigraded,
    betti_minimal_taylor, betti_minimal_taylor_multigraded, buchstaber_report,
    h_vector_identity_holds, taylor_is_minimal, tor_product_table, BettiTable, BuchstaberReport,
    CharMapGF2, FieldSpec, MultigradedBetti, Result, SimplicialComplex, TorProductTable,
};

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum BettiMethod {
    Taylor,
    Hochster,
    Koszul,
}

impl BettiMethod {
    pub fn name(self) -> &'static str {
        match self {
            BettiMethod::Taylor => "taylor",
            BettiMethod::Hochster => "hochster",
            BettiMethod::Koszul => "koszul",
        }
    }
}

/// Parse the field flag: `gf2`, `q`, or `gfp:<prime>`.
pub fn parse_field(arg: &str) -> std::result::Result<FieldSpec, String> {
    let spec = if arg == "gf2" {
        FieldSpec::GF2
    } else if arg == "q" {
        FieldSpec::Rationals
    } else if let Some(p) = arg.strip_prefix("gfp:") {
        FieldSpec::GFp(p.parse().map_err(|_| format!("bad prime {p:?}"))?)
    } else {
        return Err(format!("expected gf2, q, or gfp:<p>, found {arg:?}"));
    };
    spec.validate().map_err(|e| e.to_string())?;
    Ok(spec)
}

pub fn field_name(field: FieldSpec) -> String {
    match field {
        FieldSpec::GF2 => "gf2".into(),
        FieldSpec::Rationals => "q".into(),
        FieldSpec::GFp(p) => format!("gfp:{p}"),
    }
}

/// The Taylor engine reads the table off a minimal resolution and is
/// field-free; the other two take the requested coefficients.
pub fn betti_by_method(
    k: &SimplicialComplex,
    method: BettiMethod,
    field: FieldSpec,
) -> Result<BettiTable> {
    match method {
        BettiMethod::Taylor => betti_minimal_taylor(k),
        BettiMethod::Hochster => betti_hochster(k, field),
        BettiMethod::Koszul => betti_koszul(k, field),
    }
}

pub fn betti_multigraded_by_method(
    k: &SimplicialComplex,
    method: BettiMethod,
    field: FieldSpec,
) -> Result<MultigradedBetti> {
    match method {
        BettiMethod::Taylor => betti_minimal_taylor_multigraded(k),
        BettiMethod::Hochster => betti_hochster_multigraded(k, field),
        BettiMethod::Koszul => betti_koszul_multigraded(k, field),
    }
}

/// Entries as `{"l": -ell, "deg": 2j, "rank": n}` rows in table order,
/// matching the usual bigraded display.
pub fn betti_entries_json(table: &BettiTable) -> Value {
    Value::Array(
        table
            .entries()
            .iter()
            .map(|(&(ell, j), &rank)| json!({"l": -(ell as i64), "deg": 2 * j, "rank": rank}))
            .collect(),
    )
}

/// Matrix rows: homological degree down, internal degree across.
pub fn betti_grid(table: &BettiTable, zero: &str) -> Vec<Vec<String>> {
    let ell_max = table
        .entries()
        .keys()
        .map(|&(ell, _)| ell)
        .max()
        .unwrap_or(0);
    let j_max = table.entries().keys().map(|&(_, j)| j).max().unwrap_or(0);
    let mut header = vec!["deg".to_string()];
    header.extend((0..=j_max).map(|j| (2 * j).to_string()));
    let mut rows = vec![header];
    for ell in 0..=ell_max {
        let mut row = vec![(-(ell as i64)).to_string()];
        for j in 0..=j_max {
            let rank = table.get(ell, j);
            row.push(if rank == 0 {
                zero.to_string()
            } else {
                rank.to_string()
            });
        }
        rows.push(row);
    }
    rows
}

pub struct BettiReport {
    pub m: usize,
    pub method: BettiMethod,
    pub field: FieldSpec,
    pub table: BettiTable,
}

impl BettiReport {
    pub fn new(k: &SimplicialComplex, method: BettiMethod, field: FieldSpec) -> Result<Self> {
        Ok(BettiReport {
            m: k.m(),
            method,
            field,
            table: betti_by_method(k, method, field)?,
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "m": self.m,
            "method": self.method.name(),
            "field": field_name(self.field),
            "total": self.table.total(),
            "entries": betti_entries_json(&self.table),
        })
    }

    pub fn to_text(&self) -> String {
        format!(
            "betti table, method {}, field {}, total {}\n{}",
            self.method.name(),
            field_name(self.field),
            self.table.total(),
            crate::render::grid_aligned(&betti_grid(&self.table, ".")),
        )
    }

    pub fn to_tsv(&self) -> String {
        crate::render::grid_tsv(&betti_grid(&self.table, ""))
    }
}

pub struct MultigradedReport {
    pub m: usize,
    pub method: BettiMethod,
    pub field: FieldSpec,
    pub table: MultigradedBetti,
}

impl MultigradedReport {
    pub fn new(k: &SimplicialComplex, method: BettiMethod, field: FieldSpec) -> Result<Self> {
        Ok(MultigradedReport {
            m: k.m(),
            method,
            field,
            table: betti_multigraded_by_method(k, method, field)?,
        })
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .table
            .entries()
            .iter()
            .map(|(&(ell, set), &rank)| {
                json!({"l": -(ell as i64), "subset": set.labels(), "rank": rank})
            })
            .collect();
        json!({
            "m": self.m,
            "method": self.method.name(),
            "field": field_name(self.field),
            "entries": entries,
        })
    }

    pub fn grid(&self) -> Vec<Vec<String>> {
        let mut rows = vec![vec![
            "l".to_string(),
            "subset".to_string(),
            "rank".to_string(),
        ]];
        for (&(ell, set), &rank) in self.table.entries() {
            rows.push(vec![
                (-(ell as i64)).to_string(),
                set.to_string(),
                rank.to_string(),
            ]);
        }
        rows
    }

    pub fn to_text(&self) -> String {
        format!(
            "multigraded betti table, method {}, field {}\n{}",
            self.method.name(),
            field_name(self.field),
            crate::render::grid_aligned(&self.grid()),
        )
    }

    pub fn to_tsv(&self) -> String {
        crate::render::grid_tsv(&self.grid())
    }
}

pub struct TorReport {
    pub m: usize,
    pub nonfaces: Vec<Vec<usize>>,
    pub table: TorProductTable,
}

impl TorReport {
    pub fn new(k: &SimplicialComplex) -> Result<Self> {
        Ok(TorReport {
            m: k.m(),
            nonfaces: k.minimal_nonfaces()?.iter().map(|s| s.labels()).collect(),
            table: tor_product_table(k)?,
        })
    }

    pub fn to_json(&self) -> Value {
        let products: Vec<Value> = self
            .table
            .entries
            .iter()
            .map(|(&(a, b), term)| {
                json!({
                    "left": generator_indices(a),
                    "right": generator_indices(b),
                    "sign": term.sign,
                    "monomial": term.monomial.labels(),
                    "target": generator_indices(term.target.bits()),
                })
            })
            .collect();
        json!({
            "m": self.m,
            "minimal_nonfaces": self.nonfaces,
            "generators": self.table.generator_count,
            "trivial": self.table.is_trivial(),
            "products": products,
        })
    }

    pub fn to_text(&self) -> String {
        if self.table.is_trivial() {
            return "trivial\n".to_string();
        }
        let mut out = String::new();
        for (&(a, b), term) in &self.table.entries {
            let mut rhs = String::new();
            if term.sign < 0 {
                rhs.push('-');
            }
            if !term.monomial.is_empty() {
                rhs.push_str(&format!("x{}", term.monomial));
            }
            rhs.push_str(&format!("e{}", index_set(term.target.bits())));
            out.push_str(&format!("e{} e{} = {rhs}\n", index_set(a), index_set(b),));
        }
        out
    }
}

/// 1-based positions of a generator mask, for display.
fn generator_indices(bits: u32) -> Vec<usize> {
    (0..32)
        .filter(|i| bits >> i & 1 == 1)
        .map(|i| i + 1)
        .collect()
}

fn index_set(bits: u32) -> String {
    let parts: Vec<String> = generator_indices(bits)
        .iter()
        .map(|i| i.to_string())
        .collect();
    format!("{{{}}}", parts.join(","))
}

fn charmap_json(map: &CharMapGF2) -> Value {
    let columns: Vec<String> = map
        .columns()
        .iter()
        .map(|&c| {
            (0..map.r)
                .map(|k| if c >> k & 1 == 1 { '1' } else { '0' })
                .collect()
        })
        .collect();
    json!({"r": map.r, "columns": columns})
}

pub fn buchstaber_json(report: &BuchstaberReport) -> Value {
    json!({
        "m": report.m,
        "dim": report.dim,
        "gamma": report.gamma,
        "erokhovets_witness": report
            .erokhovets_witness
            .as_ref()
            .map(|w| w.iter().map(|s| s.labels()).collect::<Vec<_>>()),
        "r_real": {
            "lower": report.r_real_lower,
            "upper": report.r_real_upper,
            "exact": report.r_real,
            "shortcut": report.real_shortcut.map(|s| s.to_string()),
            "witness": report.real_witness.as_ref().map(charmap_json),
        },
        "s_real": report.s_real,
        "s": {
            "lower": report.s_lower,
            "upper": report.s_upper,
            "exact": report.s_exact,
            "reason": report.s_reason.to_string(),
        },
        "search": {
            "nodes": report.search_nodes,
            "budget_exhausted": report.budget_exhausted,
        },
    })
}

pub fn buchstaber_text(report: &BuchstaberReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("m        {}\n", report.m));
    out.push_str(&format!("dim      {}\n", report.dim));
    out.push_str(&format!("gamma    {}\n", report.gamma));
    match &report.erokhovets_witness {
        Some([a, b, c]) => {
            out.push_str(&format!("erokhovets witness  {a} {b} {c}\n"));
        }
        None => out.push_str("erokhovets witness  none\n"),
    }
    match report.r_real {
        Some(r) => {
            let how = report
                .real_shortcut
                .map(|s| s.to_string())
                .unwrap_or_else(|| "search".to_string());
            out.push_str(&format!(
                "r_real   {r} ({how}, {} nodes)\n",
                report.search_nodes
            ));
        }
        None => out.push_str(&format!(
            "r_real   in [{}, {}] (budget exhausted after {} nodes)\n",
            report.r_real_lower, report.r_real_upper, report.search_nodes
        )),
    }
    match report.s_real {
        Some(s) => out.push_str(&format!("s_real   {s}\n")),
        None => out.push_str(&format!(
            "s_real   in [{}, {}]\n",
            report.m - report.r_real_upper,
            report.m - report.r_real_lower
        )),
    }
    match report.s_exact {
        Some(s) => out.push_str(&format!("s        {s} ({})\n", report.s_reason)),
        None => out.push_str(&format!(
            "s        in [{}, {}]\n",
            report.s_lower, report.s_upper
        )),
    }
    if let Some(witness) = &report.real_witness {
        let columns: Vec<String> = witness
            .columns()
            .iter()
            .map(|&c| {
                (0..witness.r)
                    .map(|k| if c >> k & 1 == 1 { '1' } else { '0' })
                    .collect()
            })
            .collect();
        out.push_str(&format!("witness  {}\n", columns.join(" ")));
    }
    out
}

pub struct InvariantsReport {
    pub m: usize,
    pub ghosts: Vec<usize>,
    pub dim: i64,
    pub f: Vec<u64>,
    pub h: Vec<i64>,
    pub gamma: Option<usize>,
    pub nonfaces: Vec<Vec<usize>>,
    pub taylor_minimal: bool,
    pub betti_method: Option<&'static str>,
    pub betti: Option<BettiTable>,
    pub h_identity: Option<bool>,
    pub buchstaber: Option<BuchstaberReport>,
}

/// Everything the tool can say about one complex. Torus invariants are
/// skipped when ghost vertices are present, and the Betti engine falls
/// back from the minimal resolution to the subcomplex sweep.
pub fn invariants_report(k: &SimplicialComplex, budget: u64) -> Result<InvariantsReport> {
    let ghosts = k.ghost_vertices();
    let stats = k.vector_stats()?;
    let nonfaces: Vec<Vec<usize>> = k.minimal_nonfaces()?.iter().map(|s| s.labels()).collect();
    let gamma = if ghosts.is_empty() {
        Some(k.chromatic_number()?)
    } else {
        None
    };
    let taylor_minimal = taylor_is_minimal(k)?;
    let (betti_method, betti) = if taylor_minimal {
        (Some("minimal-taylor"), Some(betti_minimal_taylor(k)?))
    } else {
        match betti_hochster(k, FieldSpec::GF2) {
            Ok(table) => (Some("hochster-gf2"), Some(table)),
            Err(Error::SubsetEnumerationTooLarge { .. }) => (None, None),
            Err(e) => return Err(e),
        }
    };
    let h_identity = match &betti {
        Some(table) => Some(h_vector_identity_holds(k, table)?),
        None => None,
    };
    let buchstaber = if ghosts.is_empty() {
        Some(buchstaber_report(k, budget)?)
    } else {
        None
    };
    Ok(InvariantsReport {
        m: k.m(),
        ghosts,
        dim: stats.dim,
        f: stats.f,
        h: stats.h,
        gamma,
        nonfaces,
        taylor_minimal,
        betti_method,
        betti,
        h_identity,
        buchstaber,
    })
}

impl InvariantsReport {
    pub fn to_json(&self) -> Value {
        json!({
            "m": self.m,
            "ghost_vertices": self.ghosts,
            "dim": self.dim,
            "f_vector": self.f,
            "h_vector": self.h,
            "gamma": self.gamma,
            "minimal_nonfaces": self.nonfaces,
            "taylor_minimal": self.taylor_minimal,
            "betti": match &self.betti {
                Some(table) => json!({
                    "method": self.betti_method,
                    "total": table.total(),
                    "h_identity": self.h_identity,
                    "entries": betti_entries_json(table),
                }),
                None => Value::Null,
            },
            "buchstaber": match &self.buchstaber {
                Some(report) => buchstaber_json(report),
                None => Value::Null,
            },
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("m        {}\n", self.m));
        if !self.ghosts.is_empty() {
            let list: Vec<String> = self.ghosts.iter().map(|v| v.to_string()).collect();
            out.push_str(&format!("ghosts   {}\n", list.join(" ")));
        }
        out.push_str(&format!("dim      {}\n", self.dim));
        out.push_str(&format!("f-vector {}\n", join_nums(&self.f)));
        out.push_str(&format!("h-vector {}\n", join_nums(&self.h)));
        if let Some(gamma) = self.gamma {
            out.push_str(&format!("gamma    {gamma}\n"));
        }
        out.push_str(&format!("minimal non-faces ({})", self.nonfaces.len()));
        if self.nonfaces.len() <= 24 {
            for set in &self.nonfaces {
                let parts: Vec<String> = set.iter().map(|v| v.to_string()).collect();
                out.push_str(&format!(" {{{}}}", parts.join(",")));
            }
        } else {
            out.push_str("  [listing suppressed; use --format json]");
        }
        out.push('\n');
        out.push_str(&format!(
            "taylor minimal  {}\n",
            if self.taylor_minimal { "yes" } else { "no" }
        ));
        match &self.betti {
            Some(table) => {
                let identity = match self.h_identity {
                    Some(true) => "h-identity holds",
                    Some(false) => "h-identity FAILS",
                    None => "",
                };
                out.push_str(&format!(
                    "betti ({}), total {}, {}\n{}",
                    self.betti_method.unwrap_or("?"),
                    table.total(),
                    identity,
                    crate::render::grid_aligned(&betti_grid(table, ".")),
                ));
            }
            None => out.push_str("betti    skipped (no engine fits this size)\n"),
        }
        match &self.buchstaber {
            Some(report) => {
                out.push_str("buchstaber:\n");
                for line in buchstaber_text(report).lines() {
                    if line.starts_with("m ")
                        || line.starts_with("dim")
                        || line.starts_with("gamma")
                    {
                        continue;
                    }
                    out.push_str(&format!("  {line}\n"));
                }
            }
            None => out.push_str("buchstaber  skipped (ghost vertices present)\n"),
        }
        out
    }
}

fn join_nums<T: std::fmt::Display>(values: &[T]) -> String {
    let parts: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    parts.join(" ")
}
