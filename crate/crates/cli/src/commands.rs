use std::path::PathBuf;
use std::time::{Duration, Instant};

use anyhow::{Context, Result};
use mirrorcheck_core::hodge::BijectionWitness;
use mirrorcheck_core::stdbasis::{milnor_number_with, LocalOptions};
use mirrorcheck_core::thimbles::HomCase;
use mirrorcheck_core::{
    check_degree_bounds, deformed_potential, fermat_potential, hochschild_dimensions,
    hom_descriptor, hom_graph, index_bijection_check, koszul_mf, qh_dimension, verify, verify_mf,
    Cache, Envelope, Error, HHOptions, HodgeReport, HomDescriptor, MatrixFactorization, MfReport,
    MonomialOrder, ThimbleIndex,
};
use serde::{Deserialize, Serialize};

use crate::render;
use crate::{Cli, Command, GlobalOpts, Params};

/// Largest hom table listed entry by entry.
const TABLE_VERTEX_CAP: u64 = 2_000;

pub struct Output {
    pub text: String,
    pub pass: bool,
}

#[derive(Serialize, Deserialize)]
pub struct HodgeOutput {
    pub report: HodgeReport,
    pub bijection: Vec<BijectionWitness>,
}

#[derive(Serialize, Deserialize)]
pub struct HomEntry {
    pub from: ThimbleIndex,
    pub to: ThimbleIndex,
    pub hom: HomDescriptor,
}

#[derive(Serialize, Deserialize)]
pub struct HomTable {
    pub n: u32,
    pub a: u32,
    pub diagonal: u64,
    pub forward: u64,
    pub backward: u64,
    pub disjoint: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub entries: Option<Vec<HomEntry>>,
}

#[derive(Serialize, Deserialize)]
pub struct KoszulOutput {
    pub n: u32,
    pub a: u32,
    pub report: MfReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factorization: Option<MatrixFactorization>,
}

#[derive(Serialize, Deserialize)]
pub struct MilnorOutput {
    pub n: u32,
    pub a: u32,
    pub potential: String,
    pub local: bool,
    pub order: MonomialOrder,
    pub milnor: usize,
}

#[derive(Serialize, Deserialize)]
pub struct SweepRow {
    pub n: u32,
    pub a: u32,
    pub hh_even: Option<u64>,
    pub hh_odd: Option<u64>,
    pub qh_even: Option<u64>,
    pub qh_odd: Option<u64>,
    pub equal_total: bool,
    pub equal_parity: bool,
    pub bounds_pass: bool,
    pub pass: bool,
    pub error: Option<String>,
}

#[derive(Serialize, Deserialize)]
pub struct SweepOutput {
    pub rows: Vec<SweepRow>,
    /// True when the budget ran out before every pair was run.
    pub truncated: bool,
    pub skipped: Vec<(u32, u32)>,
}

pub fn run(cli: &Cli) -> Result<Output> {
    let g = &cli.global;
    match &cli.command {
        Command::Verify(p) => cmd_verify(g, *p),
        Command::Hh(p) => cmd_hh(g, *p),
        Command::Hodge(p) => cmd_hodge(g, *p),
        Command::Homs { params, from, to } => {
            cmd_homs(g, *params, from.as_deref().zip(to.as_deref()))
        }
        Command::Graph(p) => {
            let s = hom_graph(p.n, p.a)?;
            emit(g, "graph", &s, render::graph(&s), s.components == 1)
        }
        Command::Koszul(p) => cmd_koszul(g, *p),
        Command::Milnor {
            params,
            fermat,
            global,
        } => cmd_milnor(g, *params, *fermat, !*global),
        Command::Bounds(p) => {
            let r = check_degree_bounds(p.n, p.a)?;
            emit(g, "bounds", &r, render::bounds(&r), r.all_pass)
        }
        Command::Sweep {
            n_min,
            n_max,
            a_min,
            a_max,
            csv,
        } => cmd_sweep(g, (*n_min, *n_max), (*a_min, *a_max), *csv),
    }
}

fn emit<T: Serialize>(
    g: &GlobalOpts,
    command: &str,
    value: &T,
    table: String,
    pass: bool,
) -> Result<Output> {
    let text = if g.json {
        let mut s = serde_json::to_string_pretty(&Envelope::new(command, value))?;
        s.push('\n');
        s
    } else {
        table
    };
    Ok(Output { text, pass })
}

fn default_cache_dir() -> Option<PathBuf> {
    std::env::var_os("XDG_CACHE_HOME")
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))
        .map(|d| d.join("mirrorcheck"))
}

fn hh_options(g: &GlobalOpts) -> Result<HHOptions> {
    let cache = if g.no_cache {
        None
    } else {
        match g.cache_dir.clone().or_else(default_cache_dir) {
            Some(dir) => Some(
                Cache::open(&dir).with_context(|| format!("opening cache at {}", dir.display()))?,
            ),
            None => None,
        }
    };
    Ok(HHOptions {
        order: MonomialOrder::new(g.order),
        trust_sector_criterion: g.trust_sector_criterion,
        cache,
        ..Default::default()
    })
}

fn cmd_verify(g: &GlobalOpts, p: Params) -> Result<Output> {
    let mut report = verify(p.n, p.a, &hh_options(g)?)?;
    if !g.full {
        report.hh.sectors.clear();
    }
    let table = render::verification(&report);
    emit(g, "verify", &report, table, report.all_pass())
}

fn cmd_hh(g: &GlobalOpts, p: Params) -> Result<Output> {
    let mut report = hochschild_dimensions(p.n, p.a, &hh_options(g)?)?;
    let table = render::hh(&report, g.full);
    if !g.full {
        report.sectors.clear();
    }
    emit(g, "hh", &report, table, true)
}

fn cmd_hodge(g: &GlobalOpts, p: Params) -> Result<Output> {
    let report = qh_dimension(p.n, p.a)?;
    let bijection = (0..=p.n)
        .map(|k| index_bijection_check(p.n, p.a, k))
        .collect::<Result<Vec<_>, Error>>()?;
    let out = HodgeOutput { report, bijection };
    let pass = out.bijection.iter().all(|w| w.equal);
    emit(
        g,
        "hodge",
        &out,
        render::hodge(&out.report, &out.bijection),
        pass,
    )
}

fn cmd_homs(g: &GlobalOpts, p: Params, pair: Option<(&str, &str)>) -> Result<Output> {
    if let Some((from, to)) = pair {
        let from: ThimbleIndex = from.parse()?;
        let to: ThimbleIndex = to.parse()?;
        let hom = hom_descriptor(&from, &to, p.n, p.a)?;
        let table = render::hom(&from, &to, &hom);
        let entry = HomEntry { from, to, hom };
        return emit(g, "homs", &entry, table, true);
    }
    let s = hom_graph(p.n, p.a)?;
    let entries = if g.full {
        if s.vertices > TABLE_VERTEX_CAP {
            return Err(Error::ResourceExhausted(format!(
                "{} thimbles exceed the table cap {TABLE_VERTEX_CAP}",
                s.vertices
            ))
            .into());
        }
        let len = p.n as usize + 1;
        let base = p.a as u64 - 1;
        let idx: Vec<ThimbleIndex> = (0..s.vertices)
            .map(|mut k| {
                let mut v = vec![0u32; len];
                for slot in v.iter_mut().rev() {
                    *slot = (k % base) as u32 + 1;
                    k /= base;
                }
                ThimbleIndex::new(v, p.n, p.a)
            })
            .collect::<Result<_, Error>>()?;
        let mut out = Vec::new();
        for i in &idx {
            for j in &idx {
                let hom = hom_descriptor(i, j, p.n, p.a)?;
                if hom.case != HomCase::Disjoint {
                    out.push(HomEntry {
                        from: i.clone(),
                        to: j.clone(),
                        hom,
                    });
                }
            }
        }
        Some(out)
    } else {
        None
    };
    let t = HomTable {
        n: p.n,
        a: p.a,
        diagonal: s.vertices,
        forward: s.edges,
        backward: s.edges,
        disjoint: s.vertices * s.vertices - s.vertices - 2 * s.edges,
        entries,
    };
    let table = render::hom_table(&t);
    emit(g, "homs", &t, table, true)
}

fn cmd_koszul(g: &GlobalOpts, p: Params) -> Result<Output> {
    let mf = koszul_mf(p.n, p.a, None)?;
    let report = verify_mf(&mf, &deformed_potential(p.n, p.a)?);
    let out = KoszulOutput {
        n: p.n,
        a: p.a,
        factorization: g.full.then_some(mf),
        report,
    };
    let pass = out.report.pass;
    emit(g, "koszul", &out, render::koszul(&out.report), pass)
}

fn cmd_milnor(g: &GlobalOpts, p: Params, fermat: bool, local: bool) -> Result<Output> {
    let f = if fermat {
        fermat_potential(p.n, p.a)?
    } else {
        deformed_potential(p.n, p.a)?
    };
    let order = MonomialOrder::new(g.order);
    let opts = LocalOptions::for_potential(p.n, p.a);
    let milnor = milnor_number_with(&f, local, order.clone(), &opts)?;
    let out = MilnorOutput {
        n: p.n,
        a: p.a,
        potential: if fermat { "fermat" } else { "deformed" }.to_string(),
        local,
        order,
        milnor,
    };
    let table = format!(
        "{} potential, n = {}, a = {}: {} Milnor number {}\n",
        out.potential,
        p.n,
        p.a,
        if local { "local" } else { "global" },
        milnor
    );
    emit(g, "milnor", &out, table, true)
}

fn sweep_row(n: u32, a: u32, opts: &HHOptions) -> Result<SweepRow> {
    match verify(n, a, opts) {
        Ok(r) => Ok(SweepRow {
            n,
            a,
            hh_even: Some(r.hh.hh_even),
            hh_odd: Some(r.hh.hh_odd),
            qh_even: Some(r.hodge.total_even),
            qh_odd: Some(r.hodge.total_odd),
            equal_total: r.equal_total,
            equal_parity: r.equal_parity,
            bounds_pass: r.bounds.all_pass,
            pass: r.all_pass(),
            error: None,
        }),
        Err(e) if e.is_resource_cap() => Ok(SweepRow {
            n,
            a,
            hh_even: None,
            hh_odd: None,
            qh_even: None,
            qh_odd: None,
            equal_total: false,
            equal_parity: false,
            bounds_pass: false,
            pass: false,
            error: Some(e.to_string()),
        }),
        Err(e) => Err(e.into()),
    }
}

fn cmd_sweep(g: &GlobalOpts, ns: (u32, u32), as_: (u32, u32), csv: bool) -> Result<Output> {
    let opts = hh_options(g)?;
    let budget = g.budget_seconds.map(Duration::from_secs_f64);
    let start = Instant::now();
    let mut out = SweepOutput {
        rows: Vec::new(),
        truncated: false,
        skipped: Vec::new(),
    };
    for n in ns.0..=ns.1 {
        for a in as_.0..=as_.1 {
            if budget.is_some_and(|b| start.elapsed() >= b) {
                out.truncated = true;
                out.skipped.push((n, a));
                continue;
            }
            out.rows.push(sweep_row(n, a, &opts)?);
        }
    }
    let pass = out.rows.iter().all(|r| r.pass);
    let table = if csv {
        render::sweep_csv(&out)?
    } else {
        render::sweep(&out)
    };
    emit(g, "sweep", &out, table, pass)
}
