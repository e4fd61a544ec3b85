//! `cipq` — construct Keedwell cross-inverse quasigroups, check identity
//! properties, build holomorphs and isotopes, verify the small-order
//! theorem suites, and run the two-layer cipher.
//!
//! Exit codes: 0 success, 1 negative property/verification outcome,
//! 2 usage or I/O error. A failed check is a result, not an error.

use clap::{Parser, Subcommand, ValueEnum};
use std::error::Error;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use cipq::algebra::{property_counterexample, Property, PropertyStatus};
use cipq::corpus;
use cipq::crypto;
use cipq::files;
use cipq::holomorph::{build_holomorph, check_conditions, IpKind};
use cipq::isotopy::{build_isotope, derive_maps};
use cipq::keedwell::{find_params, keedwell_table, KeedwellParams};
use cipq::morphism::automorphism_group_bounded;
use cipq::verify;

#[derive(Parser)]
#[command(name = "cipq", version, about, disable_help_subcommand = true)]
struct Cli {
    /// Emit machine-readable JSON reports where applicable
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a Keedwell CIPQ over the cyclic group of order n
    GenKeedwell {
        /// Group order
        #[arg(long)]
        n: usize,
        /// Left exponent; must be given together with --s and satisfy r*s = n+1
        #[arg(long, requires = "s")]
        r: Option<usize>,
        /// Right exponent
        #[arg(long, requires = "r")]
        s: Option<usize>,
        /// Only accept parameters with r + s != n
        #[arg(long)]
        require_nonunipotent: bool,
        /// Output prefix; writes <prefix>.table.json and <prefix>.params.json
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a property of a table file
    Check {
        #[arg(long)]
        table: PathBuf,
        #[arg(long, value_enum)]
        property: CliProperty,
    },
    /// Enumerate the automorphism group of a table
    Aut {
        #[arg(long)]
        table: PathBuf,
        /// Write the group file here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Order bound for complete enumeration
        #[arg(long, default_value_t = 12)]
        limit: usize,
    },
    /// Build the holomorph of a table over its full automorphism group
    Holomorph {
        #[arg(long)]
        table: PathBuf,
        /// Holomorph table file
        #[arg(long)]
        out: PathBuf,
        /// Pair-index legend sidecar (default: <out>.legend.json)
        #[arg(long)]
        legend_out: Option<PathBuf>,
    },
    /// Build the isotope V from a table and an isotopy key file
    Isotope {
        #[arg(long)]
        table: PathBuf,
        #[arg(long)]
        key: PathBuf,
        /// Write the V table here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Encrypt bytes into a cipher envelope
    Encrypt {
        #[arg(long)]
        bundle: PathBuf,
        /// Plaintext input (default: stdin)
        #[arg(long = "in", value_name = "PATH")]
        input: Option<PathBuf>,
        /// Envelope output (default: stdout)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decrypt a cipher envelope back to bytes
    Decrypt {
        #[arg(long)]
        bundle: PathBuf,
        /// Envelope input (default: stdin)
        #[arg(long = "in", value_name = "PATH")]
        input: Option<PathBuf>,
        /// Plaintext output (default: stdout)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Largest order for the exhaustive suites (loops: default 5, max 6;
        /// keedwell: default 40, max 64)
        #[arg(long)]
        max_order: Option<usize>,
        /// Key count for the isotopy suite
        #[arg(long, default_value_t = verify::DEFAULT_ISOTOPY_TRIALS)]
        trials: usize,
        /// Seed for the isotopy suite
        #[arg(long, default_value_t = verify::DEFAULT_ISOTOPY_SEED)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CliProperty {
    Latin,
    Loop,
    Wip,
    Aip,
    Cip,
    Flexible,
    Unipotent,
    Exponent2,
    Commutative,
    Associative,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Holomorph,
    Osborn,
    Isotopy,
    Keedwell,
}

fn main() -> ExitCode {
    // die quietly on closed pipes like other unix filters
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

type CliResult = Result<ExitCode, Box<dyn Error>>;

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::GenKeedwell {
            n,
            r,
            s,
            require_nonunipotent,
            out,
        } => gen_keedwell(n, r, s, require_nonunipotent, out, cli.json),
        Command::Check { table, property } => check(&table, property, cli.json),
        Command::Aut { table, out, limit } => aut(&table, out.as_deref(), limit),
        Command::Holomorph {
            table,
            out,
            legend_out,
        } => holomorph(&table, &out, legend_out.as_deref(), cli.json),
        Command::Isotope { table, key, out } => isotope(&table, &key, out.as_deref(), cli.json),
        Command::Encrypt { bundle, input, out } => {
            encrypt(&bundle, input.as_deref(), out.as_deref())
        }
        Command::Decrypt { bundle, input, out } => {
            decrypt(&bundle, input.as_deref(), out.as_deref())
        }
        Command::Verify {
            suite,
            max_order,
            trials,
            seed,
        } => run_suite(suite, max_order, trials, seed, cli.json),
    }
}

fn gen_keedwell(
    n: usize,
    r: Option<usize>,
    s: Option<usize>,
    require_nonunipotent: bool,
    out: Option<PathBuf>,
    json: bool,
) -> CliResult {
    if n < 2 {
        return Err(format!("order {n} is too small (need at least 2)").into());
    }
    let params = match (r, s) {
        (Some(r), Some(s)) => {
            let p = KeedwellParams::new(n, r, s)?;
            if require_nonunipotent && !p.nonunipotent {
                println!("no parameters: r={r}, s={s} has r + s = n");
                return Ok(ExitCode::from(1));
            }
            p
        }
        _ => {
            let candidates = find_params(n, require_nonunipotent);
            match candidates.into_iter().next() {
                Some(p) => p,
                None => {
                    if find_params(n, false).is_empty() {
                        println!("no parameters: n + 1 = {} is prime", n + 1);
                    } else {
                        println!(
                            "no parameters: every factorization of {} has r + s = n",
                            n + 1
                        );
                    }
                    return Ok(ExitCode::from(1));
                }
            }
        }
    };
    if !params.nonunipotent {
        eprintln!(
            "warning: r + s = n, the table is unipotent (poor choice for long inverse cycles)"
        );
    }
    let table = keedwell_table(&corpus::cyclic_group(n), params.r, params.s)?;
    let prefix = out.unwrap_or_else(|| PathBuf::from(format!("keedwell-n{n}")));
    let table_path = with_suffix(&prefix, ".table.json");
    let params_path = with_suffix(&prefix, ".params.json");
    files::save_table(&table_path, &table)?;
    let mut params_json = serde_json::to_string_pretty(&params)?;
    params_json.push('\n');
    std::fs::write(&params_path, params_json)?;
    if json {
        println!(
            "{}",
            serde_json::json!({
                "params": params,
                "table_file": table_path,
                "params_file": params_path,
            })
        );
    } else {
        println!(
            "wrote order-{n} keedwell table (r={}, s={}, u={}, nonunipotent={}) to {} and {}",
            params.r,
            params.s,
            params.u,
            params.nonunipotent,
            table_path.display(),
            params_path.display()
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut name = prefix.as_os_str().to_os_string();
    name.push(suffix);
    PathBuf::from(name)
}

fn check(table: &Path, property: CliProperty, json: bool) -> CliResult {
    let t = files::load_table(table)?;
    let rep = t.validate();
    let (status, witness): (&str, Option<String>) = match property {
        CliProperty::Latin => {
            if rep.is_quasigroup {
                ("holds", None)
            } else {
                ("fails", rep.latin_violation.map(|v| format!("{v:?}")))
            }
        }
        CliProperty::Loop => {
            if rep.is_quasigroup && rep.identity.is_some() {
                ("holds", None)
            } else if !rep.is_quasigroup {
                ("fails", Some("not a quasigroup".into()))
            } else {
                ("fails", Some("no two-sided identity".into()))
            }
        }
        _ => {
            let p = match property {
                CliProperty::Wip => Property::Wip,
                CliProperty::Aip => Property::Aip,
                CliProperty::Cip => Property::Cip,
                CliProperty::Flexible => Property::Flexible,
                CliProperty::Unipotent => Property::Unipotent,
                CliProperty::Exponent2 => Property::Exponent2,
                CliProperty::Commutative => Property::Commutative,
                CliProperty::Associative => Property::Associative,
                CliProperty::Latin | CliProperty::Loop => unreachable!(),
            };
            match t.predicate(p) {
                PropertyStatus::Holds => ("holds", None),
                PropertyStatus::Undefined => (
                    "undefined",
                    Some("prerequisites missing (inverse maps or identity)".into()),
                ),
                PropertyStatus::Fails => (
                    "fails",
                    property_counterexample(&t, p)
                        .map(|(x, y)| format!("witness pair ({x}, {y})"))
                        .or(Some("no crossed inverse mappings exist".into())),
                ),
            }
        }
    };
    if json {
        println!(
            "{}",
            serde_json::json!({ "order": t.order(), "status": status, "witness": witness })
        );
    } else {
        match &witness {
            Some(w) => println!("{status}: {w}"),
            None => println!("{status}"),
        }
    }
    Ok(if status == "holds" {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn aut(table: &Path, out: Option<&Path>, limit: usize) -> CliResult {
    let t = files::load_table(table)?;
    let g = automorphism_group_bounded(&t, limit)?;
    let rendered = files::perm_group_to_json(&g);
    match out {
        Some(path) => {
            std::fs::write(path, rendered)?;
            println!(
                "automorphism group of order {} written to {}",
                g.len(),
                path.display()
            );
        }
        None => print!("{rendered}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn holomorph(table: &Path, out: &Path, legend_out: Option<&Path>, json: bool) -> CliResult {
    let t = files::load_table(table)?;
    let aum = cipq::morphism::automorphism_group(&t)?;
    let h = build_holomorph(&t, &aum)?;
    files::save_table(out, h.table())?;
    let legend_path = legend_out
        .map(Path::to_path_buf)
        .unwrap_or_else(|| with_suffix(out, ".legend.json"));
    let legend = serde_json::json!({
        "base_order": t.order(),
        "group_order": aum.len(),
        "pairing": "index(alpha, x) = ordinal(alpha) * base_order + x",
        "aum": aum.iter().map(|p| p.image().to_vec()).collect::<Vec<_>>(),
    });
    std::fs::write(
        &legend_path,
        format!("{}\n", serde_json::to_string_pretty(&legend)?),
    )?;
    // the condition report behind the CIP/AIP holomorph characterization,
    // each side evaluated independently
    let status = |s: PropertyStatus| match s {
        PropertyStatus::Holds => "holds",
        PropertyStatus::Fails => "fails",
        PropertyStatus::Undefined => "undefined",
    };
    let cip = check_conditions(&t, &aum, IpKind::Cip)?;
    let aip = check_conditions(&t, &aum, IpKind::Aip)?;
    if json {
        println!(
            "{}",
            serde_json::json!({
                "order": h.order(),
                "table_file": out,
                "legend_file": legend_path,
                "aum_abelian": cip.aum_abelian,
                "autotopism_family": cip.autotopism_family,
                "base_cip": status(cip.base_property),
                "holomorph_cip": status(cip.holomorph_property),
                "base_aip": status(aip.base_property),
                "holomorph_aip": status(aip.holomorph_property),
            })
        );
    } else {
        println!(
            "holomorph of order {} written to {} (legend: {})",
            h.order(),
            out.display(),
            legend_path.display()
        );
        println!(
            "conditions: AUM abelian {}, autotopism family {}; \
             base cip {} aip {}; holomorph cip {} aip {}",
            cip.aum_abelian,
            cip.autotopism_family,
            status(cip.base_property),
            status(aip.base_property),
            status(cip.holomorph_property),
            status(aip.holomorph_property),
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn isotope(table: &Path, key: &Path, out: Option<&Path>, json: bool) -> CliResult {
    let u = files::load_table(table)?;
    let key = files::isotopy_key_from_json(&std::fs::read_to_string(key)?, &u)?;
    let v = build_isotope(&u, &key)?;
    let maps = derive_maps(&key);
    let rendered = files::table_to_json(&v);
    match out {
        Some(path) => std::fs::write(path, &rendered)?,
        None => print!("{rendered}"),
    }
    let report = serde_json::json!({
        "delta": maps.delta.image().to_vec(),
        "gamma": maps.gamma.image().to_vec(),
        "order": v.order(),
    });
    if json {
        println!("{report}");
    } else if out.is_some() {
        println!(
            "isotope written to {} (delta {:?}, gamma {:?})",
            out.unwrap().display(),
            maps.delta.image(),
            maps.gamma.image()
        );
    } else {
        eprintln!(
            "derived maps: delta {:?}, gamma {:?}",
            maps.delta.image(),
            maps.gamma.image()
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn read_input(input: Option<&Path>) -> Result<Vec<u8>, std::io::Error> {
    match input {
        Some(path) => std::fs::read(path),
        None => {
            let mut buf = Vec::new();
            std::io::stdin().read_to_end(&mut buf)?;
            Ok(buf)
        }
    }
}

fn encrypt(bundle: &Path, input: Option<&Path>, out: Option<&Path>) -> CliResult {
    let bundle = files::load_bundle(bundle)?;
    let data = read_input(input)?;
    let envelope = crypto::encrypt(&bundle, &data)?;
    let rendered = files::envelope_to_json(&envelope);
    match out {
        Some(path) => std::fs::write(path, rendered)?,
        None => print!("{rendered}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn decrypt(bundle: &Path, input: Option<&Path>, out: Option<&Path>) -> CliResult {
    let bundle = files::load_bundle(bundle)?;
    let raw = read_input(input)?;
    let envelope = files::envelope_from_json(std::str::from_utf8(&raw)?)?;
    let data = crypto::decrypt(&bundle, &envelope)?;
    match out {
        Some(path) => std::fs::write(path, data)?,
        None => std::io::stdout().write_all(&data)?,
    }
    Ok(ExitCode::SUCCESS)
}

fn run_suite(
    suite: Suite,
    max_order: Option<usize>,
    trials: usize,
    seed: u64,
    json: bool,
) -> CliResult {
    match suite {
        Suite::Holomorph => {
            let order = max_order.unwrap_or(5);
            if order > 6 {
                return Err(format!("max-order {order} exceeds the resource bound 6").into());
            }
            let rep = verify::holomorph_suite(order);
            if json {
                println!("{}", serde_json::to_string_pretty(&rep)?);
            } else {
                println!(
                    "holomorph suite: {} loops to order {}, {} premise cases, \
                     biconditional {}, corollaries {}, characterization {}",
                    rep.loops_checked,
                    rep.max_order,
                    rep.premise_cases,
                    verdict(rep.biconditional_ok),
                    verdict(rep.corollaries_ok),
                    verdict(rep.characterization_ok),
                );
                print_findings(&rep.failures);
            }
            Ok(exit_for(rep.passed()))
        }
        Suite::Osborn => {
            let order = max_order.unwrap_or(5);
            if order > 6 {
                return Err(format!("max-order {order} exceeds the resource bound 6").into());
            }
            let rep = verify::osborn_suite(order);
            if json {
                println!("{}", serde_json::to_string_pretty(&rep)?);
            } else {
                println!(
                    "osborn suite: {} loops to order {}, CIP <=> WIP and AIP {}, \
                     identity forms agree {}",
                    rep.loops_checked,
                    rep.max_order,
                    verdict(rep.osborn_ok),
                    verdict(rep.forms_agree),
                );
                print_findings(&rep.failures);
            }
            Ok(exit_for(rep.passed()))
        }
        Suite::Keedwell => {
            let order = max_order.unwrap_or(40);
            if order > 64 {
                return Err(format!("max-order {order} exceeds the resource bound 64").into());
            }
            let rep = verify::keedwell_sweep(order);
            if json {
                println!("{}", serde_json::to_string_pretty(&rep)?);
            } else {
                println!(
                    "keedwell sweep: {} cases to n = {}, construction {}, \
                     unipotence boundary {}",
                    rep.cases.len(),
                    rep.max_n,
                    verdict(rep.construction_ok()),
                    verdict(rep.boundary_ok()),
                );
                print_findings(&rep.findings);
            }
            Ok(exit_for(rep.passed()))
        }
        Suite::Isotopy => {
            let rep = verify::isotopy_suite(trials, seed);
            if json {
                println!("{}", serde_json::to_string_pretty(&rep)?);
            } else {
                println!(
                    "isotopy suite: {} keys (seed {:#x}), quasigroup failures {}, \
                     relation failures {}, hypothesis passes {}, transfer violations {}",
                    rep.trials,
                    rep.seed,
                    rep.quasigroup_failures,
                    rep.relation_failures,
                    rep.hypothesis_passes,
                    rep.transfer_violations,
                );
                print_findings(&rep.findings);
            }
            Ok(exit_for(rep.passed()))
        }
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAILED"
    }
}

fn print_findings(findings: &[verify::Finding]) {
    for f in findings {
        println!("  finding {f}");
    }
}

fn exit_for(passed: bool) -> ExitCode {
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
