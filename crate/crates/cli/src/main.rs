//! `chainspace`: JSON front end to the chainspace library.

mod input;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use chainspace::chain::{
    alpha_degree, alpha_from_tau, alpha_slope, chi_holomorphic, dualize, moduli_dimension, tau_from_alpha, ChainType,
    ProblemInstance, StabilityParameter, TauVector,
};
use chainspace::chambers::{chamber_decomposition, Chamber};
use chainspace::geometry::polygon::ParamBox;
use chainspace::linear::{classify_linear_3chain_parameters, in_v_set, oracle_exists_semistable, DimensionVector};
use chainspace::params::birational::{alpha_max, alpha_min, birationality_boundary, component_of_midpoint};
use chainspace::params::rank_maximal::{rank_maximal_region, MapFlags};
use chainspace::params::screening::chi_screening;
use chainspace::params::special::{extremal_summary, m11_flip_locus, region_1m1, region_m1n};
use chainspace::params::standard::{r2g2_region, standard_region};
use chainspace::params::vanishing::flip_codim_lower_bound;
use chainspace::params::walls::enumerate_walls;
use chainspace::params::RegionReport;
use chainspace::render::{render_svg, Scene};
use chainspace::{Error, Result};

use input::{parse_rationals, parse_usizes, read_instance, Instance};

#[derive(Parser, Debug)]
#[command(name = "chainspace", version, about = "Stability parameters of holomorphic chains")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Type string "(r;d)", "r:d", inline JSON, a file, or "-" for stdin.
    #[arg(long, global = true)]
    instance: Option<String>,
    /// Genus; overrides the document field.
    #[arg(long, global = true)]
    genus: Option<i64>,
    /// Lower box corner, comma-separated rationals; overrides the document box.
    #[arg(long, global = true, allow_hyphen_values = true)]
    lower: Option<String>,
    #[arg(long, global = true, allow_hyphen_values = true)]
    upper: Option<String>,
    /// Seed for randomized sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Standard,
    R2g2,
    M1n,
    #[value(name = "1m1")]
    OneMOne,
    RankMaximal,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// α-degree and α-slope of the instance type.
    Slope {
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
    },
    /// χ(t2, t1) on a curve of the given genus.
    Chi {
        #[arg(long)]
        t2: String,
        #[arg(long)]
        t1: String,
    },
    /// Expected moduli dimension.
    Dim,
    /// Dual type, and dual parameter when --alpha is given.
    Dual {
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
    },
    /// τ from α, or α from τ.
    Tau {
        #[arg(long, allow_hyphen_values = true, conflicts_with = "tau")]
        alpha: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        tau: Option<String>,
    },
    /// Inequality system of a parameter region.
    Region {
        #[arg(long, value_enum, default_value = "standard")]
        family: Family,
        /// Map conditions for --family rank-maximal, comma-separated labels.
        #[arg(long)]
        maps: Option<String>,
    },
    /// Proper walls meeting the box.
    Walls,
    /// Chamber decomposition of the box.
    Chambers {
        #[arg(long, allow_hyphen_values = true)]
        locate: Option<String>,
    },
    /// Birationality boundary in the box.
    Birat,
    /// Parameters admitting semistable linear 3-chains.
    ClassifyLinear {
        #[arg(long)]
        ranks: String,
    },
    /// Brute-force existence of semistable linear chains over F_q.
    Oracle {
        #[arg(long)]
        dims: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        #[arg(long, default_value_t = 2)]
        field: u8,
        #[arg(long)]
        strict: bool,
    },
    /// Whether (left, right) lies in V(left + right).
    Vset {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long, default_value_t = chainspace::linear::interval::DEFAULT_DECOMPOSITION_CAP)]
        cap: usize,
    },
    /// Flip-locus codimension bounds, the (m,1,1) flip locus, and the χ screening sweep.
    Flip {
        /// First degree of the (1,1,1) quotient, for an (m,1,1) instance.
        #[arg(long, allow_hyphen_values = true)]
        quotient_degree: Option<i64>,
        #[arg(long)]
        screen: bool,
        #[arg(long, default_value_t = 500)]
        draws: usize,
        #[arg(long, default_value_t = 200_000)]
        max_attempts: usize,
    },
    /// Moduli data at the extremal chamber of an (m,1,n) or (1,m,1) type.
    Extremal,
    /// SVG of a region and the walls in a box.
    Render {
        #[arg(long, value_enum, default_value = "standard")]
        family: Family,
        #[arg(long)]
        maps: Option<String>,
        /// Draw the proper walls as well.
        #[arg(long)]
        walls: bool,
        #[arg(long)]
        output: Option<std::path::PathBuf>,
    },
}

enum Emit {
    Json(Value),
    Text(String),
}

fn instance(g: &Global) -> Result<Instance> {
    let mut inst = read_instance(g.instance.as_deref())?;
    if let Some(genus) = g.genus {
        inst.genus = Some(genus);
        inst.problem()?;
    }
    match (&g.lower, &g.upper) {
        (Some(lo), Some(hi)) => {
            let bx = ParamBox::new(parse_rationals(lo)?, parse_rationals(hi)?)?;
            if bx.dim() != inst.chain_type.n() {
                return Err(Error::DimensionMismatch { expected: inst.chain_type.n(), got: bx.dim() });
            }
            inst.bx = Some(bx);
        }
        (None, None) => {}
        _ => return Err(Error::invalid("--lower and --upper go together")),
    }
    Ok(inst)
}

fn genus(g: &Global, inst: Option<&Instance>) -> Result<i64> {
    g.genus
        .or_else(|| inst.and_then(|i| i.genus))
        .ok_or_else(|| Error::invalid("a genus is required (--genus or document field)"))
}

fn parameter(s: &str, n: usize) -> Result<StabilityParameter> {
    let v = parse_rationals(s)?;
    if v.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: v.len() });
    }
    Ok(StabilityParameter::from_free(&v))
}

fn map_flags(s: Option<&str>) -> Result<MapFlags> {
    use chainspace::params::rank_maximal::*;
    let mut f = MapFlags::default();
    for name in s.unwrap_or("").split(',').map(str::trim).filter(|x| !x.is_empty()) {
        match name {
            PHI1_INJECTIVE => f.phi1_injective = true,
            PHI1_GEN_SURJECTIVE => f.phi1_gen_surjective = true,
            PHI2_INJECTIVE => f.phi2_injective = true,
            PHI2_GEN_SURJECTIVE => f.phi2_gen_surjective = true,
            COMPOSITE_GEN_SURJECTIVE => f.composite_gen_surjective = true,
            _ => return Err(Error::Parse(format!("unknown map condition {name:?}"))),
        }
    }
    Ok(f)
}

fn family_region(family: Family, maps: Option<&str>, inst: &Instance, g: &Global) -> Result<(RegionReport, Value)> {
    let t = &inst.chain_type;
    Ok(match family {
        Family::Standard => (standard_region(t)?, json!({})),
        Family::R2g2 => (r2g2_region(t.n(), genus(g, Some(inst))?)?, json!({})),
        Family::RankMaximal => (rank_maximal_region(t, &map_flags(maps)?)?, json!({})),
        Family::M1n | Family::OneMOne => {
            let p = if matches!(family, Family::M1n) { region_m1n(t)? } else { region_1m1(t)? };
            let constants: serde_json::Map<String, Value> =
                p.constants.iter().map(|(k, v)| (k.clone(), output::rational(v))).collect();
            (p.report, json!({ "constants": constants, "interior_nonempty": p.interior_nonempty }))
        }
    })
}

fn family_name(f: Family) -> &'static str {
    match f {
        Family::Standard => "standard",
        Family::R2g2 => "r2g2",
        Family::M1n => "m1n",
        Family::OneMOne => "1m1",
        Family::RankMaximal => "rank-maximal",
    }
}

fn chamber(c: &Chamber) -> Value {
    json!({
        "id": c.id,
        "dim": c.dim,
        "sample": output::rationals(&c.sample),
        "signs": c.signs,
        "closure": c.closure.iter().map(|v| output::rationals(v)).collect::<Vec<_>>(),
        "bounding_lines": c.bounding_lines,
        "neighbors": c.neighbors,
        "measure": c.measure.as_ref().map(output::rational),
    })
}

fn with_instance(inst: &Instance, mut body: Value) -> Value {
    let mut v = json!({
        "instance": serde_json::to_value(inst.document()).expect("document serializes"),
        "type": output::chain_type(&inst.chain_type),
    });
    if let (Value::Object(dst), Value::Object(src)) = (&mut v, body.take()) {
        dst.extend(src);
    }
    v
}

fn run(cli: &Cli) -> Result<Emit> {
    let g = &cli.global;
    let out = match &cli.command {
        Command::Slope { alpha } => {
            let inst = instance(g)?;
            let a = parameter(alpha, inst.chain_type.n())?;
            with_instance(
                &inst,
                json!({
                    "alpha": output::rationals(a.values()),
                    "degree": output::rational(&alpha_degree(&inst.chain_type, &a)?),
                    "slope": output::rational(&alpha_slope(&inst.chain_type, &a)?),
                }),
            )
        }
        Command::Chi { t2, t1 } => {
            let (t2, t1): (ChainType, ChainType) = (t2.parse()?, t1.parse()?);
            json!({ "chi": chi_holomorphic(&t2, &t1, genus(g, None)?)? })
        }
        Command::Dim => {
            let inst = instance(g)?;
            let p = inst.problem()?;
            with_instance(&inst, json!({ "genus": p.genus, "dimension": moduli_dimension(&p)? }))
        }
        Command::Dual { alpha } => {
            let inst = instance(g)?;
            let t = &inst.chain_type;
            let a = match alpha {
                Some(s) => parameter(s, t.n())?,
                None => StabilityParameter::zero(t.n()),
            };
            let (dt, da) = dualize(t, &a)?;
            let mut body = json!({ "dual": output::chain_type(&dt) });
            if alpha.is_some() {
                body["alpha"] = output::rationals(a.values());
                body["dual_alpha"] = output::rationals(da.values());
            }
            with_instance(&inst, body)
        }
        Command::Tau { alpha, tau } => {
            let inst = instance(g)?;
            let t = &inst.chain_type;
            let a = match (alpha, tau) {
                (Some(s), _) => parameter(s, t.n())?,
                (None, Some(s)) => {
                    let values = parse_rationals(s)?;
                    if values.len() != t.len() {
                        return Err(Error::DimensionMismatch { expected: t.len(), got: values.len() });
                    }
                    alpha_from_tau(&TauVector { values })?
                }
                (None, None) => return Err(Error::invalid("give --alpha or --tau")),
            };
            let tv = tau_from_alpha(t, &a)?;
            with_instance(&inst, json!({ "alpha": output::rationals(a.values()), "tau": output::rationals(&tv.values) }))
        }
        Command::Region { family, maps } => {
            let inst = instance(g)?;
            let (mut report, extra) = family_region(*family, maps.as_deref(), &inst, g)?;
            if let (Some(bx), 2) = (&inst.bx, inst.chain_type.n()) {
                report = report.with_cell(bx)?;
            }
            let mut body = json!({ "family": family_name(*family) });
            if let (Value::Object(dst), Value::Object(a), Value::Object(b)) = (&mut body, output::region(&report), extra) {
                dst.extend(a);
                dst.extend(b);
            }
            with_instance(&inst, body)
        }
        Command::Walls => {
            let inst = instance(g)?;
            let bx = inst.box_or_default()?;
            let ws = enumerate_walls(&inst.chain_type, &bx)?;
            let walls: Vec<Value> = ws
                .walls
                .iter()
                .map(|w| {
                    let mut v = output::functional(&w.functional);
                    v["signature"] = json!({ "ranks": w.signature.s, "degree": w.signature.e });
                    v
                })
                .collect();
            let improper: Vec<Value> = ws.improper.iter().map(|s| json!({ "ranks": s.s, "degree": s.e })).collect();
            with_instance(&inst, json!({ "box": output::param_box(&bx), "walls": walls, "improper": improper }))
        }
        Command::Chambers { locate } => {
            let inst = instance(g)?;
            let bx = inst.box_or_default()?;
            let d = chamber_decomposition(&inst.chain_type, &bx)?;
            let lines: Vec<Value> = d.lines.iter().map(output::functional).collect();
            match locate {
                Some(s) => {
                    let p = parse_rationals(s)?;
                    let id = d.locate(&p)?;
                    with_instance(
                        &inst,
                        json!({ "box": output::param_box(&bx), "point": output::rationals(&p), "chamber": chamber(&d.chambers[id]) }),
                    )
                }
                None => with_instance(
                    &inst,
                    json!({
                        "box": output::param_box(&bx),
                        "lines": lines,
                        "full_dimensional": d.count_full_dimensional(),
                        "total": d.chambers.len(),
                        "chambers": d.chambers.iter().map(chamber).collect::<Vec<_>>(),
                    }),
                ),
            }
        }
        Command::Birat => {
            let inst = instance(g)?;
            let t = &inst.chain_type;
            let bx = inst.box_or_default()?;
            let boundary: Vec<Value> = birationality_boundary(t, &bx)?
                .iter()
                .map(|b| {
                    let mut v = output::functional(&b.functional);
                    v["split"] = json!({ "left": output::chain_type(&b.split.left), "right": output::chain_type(&b.split.right) });
                    v
                })
                .collect();
            let mut body = json!({ "box": output::param_box(&bx), "boundary": boundary });
            if t.len() == 2 && t.all_ranks_positive() {
                body["alpha_min"] = output::rational(&alpha_min(t)?);
                body["alpha_max"] = alpha_max(t)?.as_ref().map(output::rational).unwrap_or(Value::Null);
                let (lo, hi) = component_of_midpoint(t, &bx)?;
                body["component"] = json!([lo.as_ref().map(output::rational), hi.as_ref().map(output::rational)]);
            }
            with_instance(&inst, body)
        }
        Command::ClassifyLinear { ranks } => {
            let c = classify_linear_3chain_parameters(&DimensionVector::new(parse_usizes(ranks)?)?)?;
            json!({ "case": c.case, "semistable_set": c.set.describe() })
        }
        Command::Oracle { dims, alpha, field, strict } => {
            let dv = DimensionVector::new(parse_usizes(dims)?)?;
            let a = parameter(alpha, dv.n())?;
            let exists = oracle_exists_semistable(&dv, &a, *field, *strict)?;
            json!({
                "dims": dv.dims,
                "alpha": output::rationals(a.values()),
                "field": field,
                "strict": strict,
                "exists": exists,
            })
        }
        Command::Vset { left, right, cap } => {
            let (l, r) = (DimensionVector::new(parse_usizes(left)?)?, DimensionVector::new(parse_usizes(right)?)?);
            let w = in_v_set(&l, &r, *cap)?;
            json!({
                "left": l.dims,
                "right": r.dims,
                "member": w.is_some(),
                "witness": w.map(|w| json!({
                    "left": w.left.intervals().iter().map(|m| [m.p, m.q]).collect::<Vec<_>>(),
                    "right": w.right.intervals().iter().map(|m| [m.p, m.q]).collect::<Vec<_>>(),
                })),
            })
        }
        Command::Flip { quotient_degree, screen, draws, max_attempts } => {
            let inst = g.instance.as_ref().map(|_| instance(g)).transpose()?;
            let genus = genus(g, inst.as_ref())?;
            let b = flip_codim_lower_bound(genus)?;
            let mut body = json!({ "genus": genus, "codim_lower_bound": b.value, "minimizing_m": b.minimizing_m });
            if let Some(d) = quotient_degree {
                let inst = inst.as_ref().ok_or_else(|| Error::invalid("--quotient-degree needs --instance"))?;
                let p = ProblemInstance::new(genus, inst.chain_type.clone())?;
                let (locus, codim) = m11_flip_locus(&p, *d)?;
                body["flip_locus"] = json!({ "quotient_degree": d, "dimension": locus, "codimension": codim });
            }
            if *screen {
                let mut rng = ChaCha8Rng::seed_from_u64(g.seed);
                let mut sample = |lo: i64, hi: i64| rng.gen_range(lo..=hi);
                let report = chi_screening(*draws, *max_attempts, &mut sample)?;
                body["screening"] = json!({
                    "seed": g.seed,
                    "attempts": report.attempts,
                    "accepted": report.accepted,
                    "skipped_on_boundary": report.skipped_on_boundary,
                    "violations": serde_json::to_value(&report.violations).expect("samples serialize"),
                    "passed": report.passed(),
                });
            }
            match inst {
                Some(i) => with_instance(&i, body),
                None => body,
            }
        }
        Command::Extremal => {
            let inst = instance(g)?;
            let s = extremal_summary(&inst.problem()?)?;
            with_instance(&inst, serde_json::to_value(&s).expect("summary serializes"))
        }
        Command::Render { family, maps, walls, output } => {
            let inst = instance(g)?;
            let bx = inst.box_or_default()?;
            let (region, _) = family_region(*family, maps.as_deref(), &inst, g)?;
            let lines = if *walls { enumerate_walls(&inst.chain_type, &bx)?.functionals() } else { Vec::new() };
            let scene = Scene {
                title: format!("{} {} region", inst.chain_type, family_name(*family)),
                bx: &bx,
                region: Some(&region),
                walls: &lines,
            };
            let svg = render_svg(&scene)?;
            match output {
                Some(path) => {
                    std::fs::write(path, &svg).map_err(|e| Error::invalid(format!("{}: {e}", path.display())))?;
                    json!({ "written": path.display().to_string(), "bytes": svg.len() })
                }
                None => return Ok(Emit::Text(svg)),
            }
        }
    };
    Ok(Emit::Json(out))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Emit::Json(v)) => {
            let s = if cli.global.pretty { serde_json::to_string_pretty(&v) } else { serde_json::to_string(&v) };
            println!("{}", s.expect("JSON value serializes"));
            ExitCode::SUCCESS
        }
        Ok(Emit::Text(s)) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{}", output::error(&e));
            ExitCode::from(output::exit_code(&e) as u8)
        }
    }
}
