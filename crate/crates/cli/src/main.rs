//! `crosscheck` — exact crossing-change obstruction analysis from the
//! command line.
//!
//! Exit codes: 0 success, 1 success with data warnings, 2 errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::json;

use crosscheck_core::census::{self, CensusConfig, ReportFormat};
use crosscheck_core::factor::{factor_int, factor_mod_p};
use crosscheck_core::laurent::LaurentPoly;
use crosscheck_core::linalg::{smith_normal_form, IntMatrix};
use crosscheck_core::obstruction::{detect_bad_factor, det_has_square_factor, invariant_factors_square_free};
use crosscheck_core::seifert::{pretzel_seifert_matrix, SeifertMatrix};

#[derive(Parser)]
#[command(name = "crosscheck", version, about = "Alexander-polynomial obstructions to cosmetic crossing changes, exactly")]
struct Cli {
    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the bad-factor detector on one knot, given either its Alexander
    /// polynomial or a Seifert matrix
    Analyze {
        /// Alexander polynomial, e.g. "1-t+t^2" or "[1,-1,1] @ -1"
        #[arg(long, conflicts_with = "seifert")]
        delta: Option<String>,
        /// Seifert matrix in nested-bracket form, e.g. `[[0,1],[0,0]]`
        #[arg(long)]
        seifert: Option<String>,
    },
    /// Factor an integer polynomial into irreducibles
    Factor {
        /// The polynomial, in the same grammar as --delta
        poly: String,
        /// Factor over F_p for this prime instead of over the integers
        #[arg(long)]
        modulus: Option<u64>,
    },
    /// Smith normal form of an integer matrix
    Snf {
        /// Matrix in nested-bracket form
        matrix: String,
    },
    /// Analyze the pretzel knot P(p1, p2, p3, p4, -q)
    Pretzel {
        p1: i64,
        p2: i64,
        p3: i64,
        p4: i64,
        q: i64,
    },
    /// Classify a whole census CSV and print the summary
    Census {
        /// Path to the CSV file
        csv: PathBuf,
        /// Declarative TOML config: column map, rule ladder, name lists
        #[arg(long)]
        config: Option<PathBuf>,
        /// Write the full report to this path
        #[arg(long)]
        output: Option<PathBuf>,
        /// Report format: text, json, or csv
        #[arg(long, default_value = "text")]
        format: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<ExitCode> {
    match &cli.command {
        Command::Analyze { delta, seifert } => {
            if let Some(text) = delta {
                let p = LaurentPoly::parse(text)?;
                analyze_delta(&p, None, cli.json)?;
            } else if let Some(text) = seifert {
                let sm = SeifertMatrix::parse(text)?;
                let delta = sm.alexander_polynomial()?;
                analyze_delta(&delta, Some(&sm), cli.json)?;
            } else {
                anyhow::bail!("provide --delta or --seifert");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Factor { poly, modulus } => {
            let p = LaurentPoly::parse(poly)?;
            let rep = p
                .int_rep()
                .ok_or_else(|| anyhow::anyhow!("cannot factor the zero polynomial"))?;
            match modulus {
                Some(prime) => {
                    let f = factor_mod_p(&rep, *prime)?;
                    if cli.json {
                        let factors: Vec<_> = f
                            .factors
                            .iter()
                            .map(|(p, m)| json!({"factor": p.to_string(), "multiplicity": m}))
                            .collect();
                        println!(
                            "{}",
                            serde_json::to_string_pretty(&json!({
                                "input": rep.to_string(),
                                "prime": f.prime,
                                "unit": f.unit,
                                "irreducible": f.is_irreducible(),
                                "factors": factors,
                            }))?
                        );
                    } else {
                        println!("input       : {rep}");
                        println!("modulus     : {prime}");
                        println!("irreducible : {}", f.is_irreducible());
                        for (g, m) in &f.factors {
                            println!("  ({g})^{m}");
                        }
                    }
                }
                None => {
                    let f = factor_int(&rep)?;
                    if cli.json {
                        let factors: Vec<_> = f
                            .factors
                            .iter()
                            .map(|(p, m)| json!({"factor": p.to_string(), "multiplicity": m}))
                            .collect();
                        println!(
                            "{}",
                            serde_json::to_string_pretty(&json!({
                                "input": rep.to_string(),
                                "sign": f.sign,
                                "content": f.content.to_string(),
                                "irreducible": f.is_irreducible(),
                                "factors": factors,
                            }))?
                        );
                    } else {
                        println!("input       : {rep}");
                        println!("factored    : {f}");
                        println!("irreducible : {}", f.is_irreducible());
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Snf { matrix } => {
            let m = IntMatrix::parse(matrix)?;
            let snf = smith_normal_form(&m);
            let factors = snf.invariant_factors();
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "matrix": m.to_string(),
                        "d": snf.d.to_string(),
                        "u": snf.u.to_string(),
                        "w": snf.w.to_string(),
                        "invariant_factors": factors.iter().map(BigInt::to_string).collect::<Vec<_>>(),
                    }))?
                );
            } else {
                println!("matrix            : {m}");
                println!("smith normal form : {}", snf.d);
                println!("row transform U   : {}", snf.u);
                println!("col transform W   : {}", snf.w);
                println!(
                    "invariant factors : [{}]",
                    factors.iter().map(BigInt::to_string).collect::<Vec<_>>().join(", ")
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Pretzel { p1, p2, p3, p4, q } => {
            let (sm, conditions) = pretzel_seifert_matrix(*p1, *p2, *p3, *p4, *q)?;
            let delta = sm.alexander_polynomial()?;
            let rep = delta.int_rep().expect("pretzel Δ is nonzero");
            let mod2 = crosscheck_core::factor::Gf2Poly::from_int_poly(&rep)
                .expect("census-scale degree");
            let det = sm.knot_determinant()?;
            let verdict = detect_bad_factor(&delta)?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "pretzel": format!("P({p1},{p2},{p3},{p4},-{q})"),
                        "seifert_matrix": sm.matrix().to_string(),
                        "conditions": {
                            "positivity": conditions.positivity,
                            "congruence": conditions.congruence,
                            "unimodular": conditions.unimodular,
                        },
                        "delta": delta.to_string(),
                        "delta_mod_2": mod2.to_string(),
                        "determinant": det.to_string(),
                        "determinant_square_factor": det_has_square_factor(&det),
                        "bad_factor": verdict.bad_factor_exists(),
                        "witness": verdict.witness.map(|w| w.to_string()),
                    }))?
                );
            } else {
                println!("pretzel           : P({p1},{p2},{p3},{p4},-{q})");
                println!("seifert matrix    : {}", sm.matrix());
                println!("positivity (i)    : {}", ok_or_violated(conditions.positivity));
                println!("congruence (ii)   : {}", ok_or_violated(conditions.congruence));
                println!("unimodular V-V^T  : {}", ok_or_violated(conditions.unimodular));
                println!("delta             : {delta}");
                println!("delta mod 2       : {mod2}");
                println!("determinant       : {det}");
                println!("det square factor : {}", det_has_square_factor(&det));
                println!("bad factor        : {}", verdict.bad_factor_exists());
                if let Some(w) = &verdict.witness {
                    println!("witness           : {w}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Census { csv, config, output, format } => {
            let format = match format.as_str() {
                "json" => ReportFormat::Json,
                "csv" => ReportFormat::Csv,
                "text" => ReportFormat::Text,
                other => anyhow::bail!("unknown format '{other}' (expected text, json, or csv)"),
            };
            let cfg = match config {
                Some(path) => CensusConfig::from_toml(&fs::read_to_string(path)?)?,
                None => CensusConfig::default(),
            };
            let file = fs::File::open(csv)?;
            let (records, warnings) = census::parse_catalog(file, &cfg)?;
            let had_warnings = !warnings.is_empty();
            let report = census::run_census(&records, warnings, &cfg);
            let rendered = census::emit_report(&report, format);
            match output {
                Some(path) => {
                    fs::write(path, &rendered)?;
                    // summary always goes to stdout
                    print!("{}", String::from_utf8_lossy(&census::emit_report(&report, ReportFormat::Text)));
                }
                None => print!("{}", String::from_utf8_lossy(&rendered)),
            }
            if had_warnings {
                Ok(ExitCode::from(1))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
    }
}

fn ok_or_violated(ok: bool) -> &'static str {
    if ok {
        "satisfied"
    } else {
        "violated"
    }
}

fn analyze_delta(
    delta: &LaurentPoly,
    seifert: Option<&SeifertMatrix>,
    as_json: bool,
) -> anyhow::Result<()> {
    let verdict = detect_bad_factor(delta)?;
    let det = delta.eval_at_minus_one();
    if as_json {
        let mut doc = json!({
            "delta": delta.to_string(),
            "determinant": det.magnitude().to_string(),
            "determinant_square_factor": det_has_square_factor(&det),
            "bad_factor": verdict.bad_factor_exists(),
            "witness": verdict.witness.as_ref().map(|w| w.to_string()),
            "usable_factors": verdict.usable.iter().map(|u| json!({
                "factor": u.poly.to_string(),
                "pair_capacity": u.pair_capacity,
                "value_at_minus_one": u.value_at_minus_one.to_string(),
            })).collect::<Vec<_>>(),
        });
        if let Some(sm) = seifert {
            let obj = doc.as_object_mut().unwrap();
            obj.insert("signature".into(), json!(sm.signature()));
            let (sq_free, factors) = invariant_factors_square_free(sm);
            obj.insert(
                "invariant_factors".into(),
                json!(factors.iter().map(BigInt::to_string).collect::<Vec<_>>()),
            );
            obj.insert("invariant_factors_square_free".into(), json!(sq_free));
            let trace = sm.proof_trace()?;
            let trace_doc = match trace.kernel {
                None => json!({"delta_l": trace.delta_l.to_string(), "singular": false}),
                Some(k) => json!({
                    "delta_l": "0",
                    "singular": true,
                    "kernel_vector": k.v1.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                    "f": k.f.to_string(),
                    "f_primitive": k.f_primitive,
                    "f_at_minus_one": k.f_at_minus_one.to_string(),
                    "conjugate_identity": k.conjugate_identity_holds,
                    "nullhomologous": k.nullhomologous,
                }),
            };
            obj.insert("trace".into(), trace_doc);
        }
        println!("{}", serde_json::to_string_pretty(&doc)?);
    } else {
        println!("delta             : {delta}");
        println!("determinant       : {}", det.magnitude());
        println!("det square factor : {}", det_has_square_factor(&det));
        println!("bad factor        : {}", verdict.bad_factor_exists());
        if let Some(w) = &verdict.witness {
            println!("witness           : {w}");
        }
        for u in &verdict.usable {
            println!(
                "  usable factor ({}) capacity {} value_at_-1 {}",
                u.poly, u.pair_capacity, u.value_at_minus_one
            );
        }
        if let Some(sm) = seifert {
            println!("signature         : {}", sm.signature());
            let (sq_free, factors) = invariant_factors_square_free(sm);
            println!(
                "invariant factors : [{}] square-free: {sq_free}",
                factors.iter().map(BigInt::to_string).collect::<Vec<_>>().join(", ")
            );
            let trace = sm.proof_trace()?;
            match trace.kernel {
                None => println!("minor delta_L     : {} (nonsingular)", trace.delta_l),
                Some(k) => {
                    println!("minor delta_L     : 0 (singular)");
                    println!(
                        "  kernel vector   : [{}]",
                        k.v1.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")
                    );
                    println!("  f               : {}", k.f);
                    println!("  f primitive     : {}", k.f_primitive);
                    println!("  f(-1)           : {}", k.f_at_minus_one);
                    println!("  conjugate ident : {}", k.conjugate_identity_holds);
                    println!("  nullhomologous  : {}", k.nullhomologous);
                }
            }
        }
    }
    Ok(())
}
