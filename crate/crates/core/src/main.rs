use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use spinrep::groupcore::{self, isomorphism_fingerprint, Group};
use spinrep::spinrep::{
    canonical_section, descend, irreps_by_spin_type, restrict_to_projective, spin_character_table,
    CharacterTable, Representation, SpinType,
};
use spinrep::verify::{Verifier, CHECKS};

#[derive(Parser)]
#[command(
    name = "spinrep",
    version,
    about = "Spin representations of G(27,3) through its representation group R243"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Presentation and structure of a catalog group
    Group {
        /// G27, G81, GBAR, GSHARP, R243, or G81_param(a,b)
        name: String,
    },
    /// Generator images of the IRs of one spin type
    Irreps {
        /// "e,m" with entries in {-1,0,1,2}, or "all"
        #[arg(long)]
        spin: String,
        /// Show images on this quotient instead of R243 (G27, G81, GBAR)
        #[arg(long)]
        group: Option<String>,
    },
    /// The 35 x 35 spin character table of R243
    Chartable {
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Factor set on G27 of an IR, along the canonical section
    Cocycle {
        #[arg(long)]
        spin: String,
        /// IR name such as "Pi_{1,0;0}"; defaults to the first of the type
        #[arg(long)]
        irrep: Option<String>,
    },
    /// Run the named checks; exit 0 iff all pass
    Verify {
        /// Run only this check
        #[arg(long)]
        only: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

enum Failure {
    Usage(String),
    Verification,
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match cli.command {
        Command::Group { name } => cmd_group(&name),
        Command::Irreps { spin, group } => cmd_irreps(&spin, group.as_deref()),
        Command::Chartable { format, out } => cmd_chartable(format, out),
        Command::Cocycle { spin, irrep } => cmd_cocycle(&spin, irrep.as_deref()),
        Command::Verify { only, json } => cmd_verify(only.as_deref(), json),
    };
    match out {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn lookup_group(name: &str) -> Result<groupcore::Schema, Failure> {
    let params = name
        .strip_prefix("G81_param(")
        .and_then(|r| r.strip_suffix(')'))
        .map(|p| {
            let (a, b) = p
                .split_once(',')
                .ok_or_else(|| Failure::Usage(format!("bad parameters in {name}")))?;
            let parse = |x: &str| {
                x.trim()
                    .parse::<u8>()
                    .map_err(|_| Failure::Usage(format!("bad parameters in {name}")))
            };
            Ok::<_, Failure>((parse(a)?, parse(b)?))
        });
    match params {
        Some(p) => Ok(groupcore::schema("G81_param", Some(p?))?),
        None => Ok(groupcore::schema(name, None)?),
    }
}

fn cmd_group(name: &str) -> Result<(), Failure> {
    let s = lookup_group(name)?;
    let g = Group::new(s.clone())?;
    let fp = isomorphism_fingerprint(&g);
    let mut out = String::new();
    writeln!(out, "group {}", s.name()).unwrap();
    writeln!(out, "order {}", g.order()).unwrap();
    let gens: Vec<String> = (0..s.rank())
        .map(|i| {
            format!(
                "{}{}",
                s.generators()[i],
                if s.is_central(i) { "*" } else { "" }
            )
        })
        .collect();
    writeln!(out, "generators {}  (* central)", gens.join(" ")).unwrap();
    writeln!(out, "relations").unwrap();
    for r in s.relations() {
        writeln!(out, "  {}", r.text).unwrap();
    }
    let list = |sub: &groupcore::Subgroup| {
        sub.elements()
            .map(|e| s.format_element(e))
            .collect::<Vec<_>>()
            .join(", ")
    };
    writeln!(
        out,
        "center ({}): {}",
        g.center().order(),
        list(&g.center())
    )
    .unwrap();
    writeln!(
        out,
        "derived subgroup ({}): {}",
        g.derived_subgroup().order(),
        list(&g.derived_subgroup())
    )
    .unwrap();
    writeln!(out, "abelianization {:?}", fp.abelianization).unwrap();
    let orders: Vec<String> = fp
        .element_orders
        .iter()
        .map(|(o, c)| format!("{o}:{c}"))
        .collect();
    writeln!(out, "element orders {}", orders.join(" ")).unwrap();
    let classes = g.conjugacy_classes();
    writeln!(out, "classes {}", classes.len()).unwrap();
    for c in &classes {
        writeln!(out, "  {}  size {}", s.format_element(&c.rep), c.size()).unwrap();
    }
    print!("{out}");
    Ok(())
}

fn parse_spin(spin: &str) -> Result<Vec<SpinType>, Failure> {
    if spin == "all" {
        return Ok(SpinType::all());
    }
    Ok(vec![spin.parse::<SpinType>()?])
}

fn cmd_irreps(spin: &str, group: Option<&str>) -> Result<(), Failure> {
    let types = parse_spin(spin)?;
    let mut out = String::new();
    for st in types {
        for r in irreps_by_spin_type(st)? {
            let r: Representation = match group {
                None | Some("R243") => r,
                Some(target) => descend(&r, target)?,
            };
            writeln!(
                out,
                "{}  spin {}  dim {}  on {}",
                r.name(),
                st,
                r.dim(),
                r.schema().name()
            )
            .unwrap();
            for (g, m) in r.images().iter().enumerate() {
                writeln!(out, "  {} -> {m}", r.schema().generators()[g]).unwrap();
            }
        }
    }
    print!("{out}");
    Ok(())
}

#[derive(Serialize)]
struct TableJson {
    group: String,
    classes: Vec<ClassJson>,
    irreps: Vec<IrrepJson>,
}

#[derive(Serialize)]
struct ClassJson {
    rep: String,
    size: usize,
}

#[derive(Serialize)]
struct IrrepJson {
    name: String,
    spin_type: [u8; 2],
    dim: usize,
    values: Vec<String>,
}

fn render_table(t: &CharacterTable, format: Format) -> Result<String, Failure> {
    let s = groupcore::schema(&t.group, None)?;
    let reps: Vec<String> = t
        .classes
        .classes()
        .iter()
        .map(|c| s.format_element(&c.rep))
        .collect();
    match format {
        Format::Json => {
            let doc = TableJson {
                group: t.group.clone(),
                classes: t
                    .classes
                    .classes()
                    .iter()
                    .zip(&reps)
                    .map(|(c, rep)| ClassJson {
                        rep: rep.clone(),
                        size: c.size(),
                    })
                    .collect(),
                irreps: t
                    .rows
                    .iter()
                    .map(|r| IrrepJson {
                        name: r.name.clone(),
                        spin_type: [r.spin_type.eps, r.spin_type.mu],
                        dim: r.dim,
                        values: r.character.values().iter().map(|v| v.to_string()).collect(),
                    })
                    .collect(),
            };
            Ok(
                serde_json::to_string_pretty(&doc).map_err(|e| Failure::Usage(e.to_string()))?
                    + "\n",
            )
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let mut header = vec!["name".to_string(), "eps".into(), "mu".into(), "dim".into()];
            header.extend(reps);
            w.write_record(&header)?;
            for r in &t.rows {
                let mut rec = vec![
                    r.name.clone(),
                    r.spin_type.eps.to_string(),
                    r.spin_type.mu.to_string(),
                    r.dim.to_string(),
                ];
                rec.extend(r.character.values().iter().map(|v| v.to_string()));
                w.write_record(&rec)?;
            }
            let bytes = w.into_inner().map_err(|e| Failure::Usage(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| Failure::Usage(e.to_string()))
        }
    }
}

fn cmd_chartable(format: Format, out: Option<PathBuf>) -> Result<(), Failure> {
    let t = spin_character_table()?;
    let text = render_table(&t, format)?;
    match out {
        Some(path) => fs::write(&path, text)
            .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn cmd_cocycle(spin: &str, irrep: Option<&str>) -> Result<(), Failure> {
    let st: SpinType = spin.parse()?;
    let reps = irreps_by_spin_type(st)?;
    let r = match irrep {
        None => &reps[0],
        Some(name) => reps
            .iter()
            .find(|r| r.name() == name)
            .ok_or_else(|| Failure::Usage(format!("no IR named {name} of spin type {st}")))?,
    };
    let section = canonical_section()?;
    let (_, table) = restrict_to_projective(r, &section)?;
    let base = table.base().clone();
    let mut out = String::new();
    writeln!(
        out,
        "cocycle of {} (spin {st}) on G27, alpha(g,h) = w^k",
        r.name()
    )
    .unwrap();
    writeln!(out, "section: x1^a x2^b x3^c -> n1^a n2^b n3^c").unwrap();
    writeln!(out, "rows g, columns h, in this order:").unwrap();
    for (i, g) in table.elements().iter().enumerate() {
        writeln!(out, "  {i:2} {}", base.format_element(g)).unwrap();
    }
    for g in table.elements() {
        let row: String = table
            .elements()
            .iter()
            .map(|h| char::from(b'0' + table.exponent(g, h)))
            .collect();
        writeln!(out, "{row}").unwrap();
    }
    let identity = table.check_cocycle_identity().is_ok();
    writeln!(
        out,
        "cocycle identity: {}",
        if identity { "holds" } else { "FAILS" }
    )
    .unwrap();
    writeln!(out, "normalized: {}", table.is_normalized()).unwrap();
    writeln!(out, "trivial: {}", table.is_trivial()).unwrap();
    print!("{out}");
    Ok(())
}

fn cmd_verify(only: Option<&str>, json: bool) -> Result<(), Failure> {
    if let Some(name) = only {
        if !CHECKS.iter().any(|c| c.name == name) {
            let names: Vec<&str> = CHECKS.iter().map(|c| c.name).collect();
            return Err(Failure::Usage(format!(
                "unknown check {name:?}; known: {}",
                names.join(", ")
            )));
        }
    }
    let results = Verifier::new().run(only)?;
    let failed = results.iter().filter(|r| !r.passed).count();
    if json {
        #[derive(Serialize)]
        struct Doc<'a> {
            checks: &'a [spinrep::verify::CheckResult],
            passed: usize,
            failed: usize,
        }
        let doc = Doc {
            checks: &results,
            passed: results.len() - failed,
            failed,
        };
        println!(
            "{}",
            serde_json::to_string_pretty(&doc).map_err(|e| Failure::Usage(e.to_string()))?
        );
    } else {
        for r in &results {
            println!(
                "{} {:2} {}: {}",
                if r.passed { "PASS" } else { "FAIL" },
                r.criterion,
                r.name,
                r.detail
            );
        }
        println!("{} passed, {} failed", results.len() - failed, failed);
    }
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}
