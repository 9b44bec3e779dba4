use std::fs;
use std::io::Write;

use matcount::counting::{count_covering, count_unrestricted, IdentityId, ParamPoint};
use matcount::enumerate::{count_bruteforce, enumerate_matrices};
use matcount::scalar::{from_decimal, to_decimal};
use matcount::shape::MatrixShape;
use matcount::verify::{
    descriptor, reports_to_csv, runs_to_json, sequence_emit, verify_identity, BoundOverrides,
    GridConfig, IdentityReport, OracleMode, OracleStatus, VerifyRun,
};
use matcount::ExactInt;

use crate::{CliError, CountArgs, EnumerateArgs, Format, Method, OracleArg, TableArgs, VerifyArgs};

fn parse_shape(rows: u64, cols: u64, colweight: u64) -> Result<MatrixShape, CliError> {
    MatrixShape::new(rows, cols, colweight).map_err(|e| CliError::usage(e.to_string()))
}

// --- count --------------------------------------------------------------

pub fn count(args: CountArgs) -> Result<(), CliError> {
    let shape = parse_shape(args.rows, args.cols, args.colweight)?;

    let formula = |covering_fault: bool| -> (ExactInt, ExactInt) {
        let unrestricted = count_unrestricted::<ExactInt>(&shape);
        let mut covering = count_covering::<ExactInt>(&shape);
        if covering_fault {
            // Testing hook: lets the black-box suite exercise the mismatch
            // exit path that a correct build cannot reach.
            if let Ok(text) = std::env::var("MATCOUNT_FAULT_COVERING") {
                if let Ok(v) = from_decimal::<ExactInt>(&text) {
                    covering = v;
                }
            }
        }
        (unrestricted, covering)
    };
    let bruteforce = || -> Result<(ExactInt, ExactInt), CliError> {
        let unrestricted =
            count_bruteforce::<ExactInt>(&shape, false, args.cap).map_err(CliError::from_lib)?;
        let covering =
            count_bruteforce::<ExactInt>(&shape, true, args.cap).map_err(CliError::from_lib)?;
        Ok((unrestricted, covering))
    };

    let (unrestricted, covering, brute, agreement) = match args.method {
        Method::Formula => {
            let (u, c) = formula(true);
            (u, c, None, None)
        }
        Method::Bruteforce => {
            let (u, c) = bruteforce()?;
            (u, c, None, None)
        }
        Method::Both => {
            let (u, c) = formula(true);
            let (bu, bc) = bruteforce()?;
            let agree = u == bu && c == bc;
            (u, c, Some((bu, bc)), Some(agree))
        }
    };

    match args.format {
        Format::Text => {
            println!("unrestricted={}", to_decimal(&unrestricted));
            println!("covering={}", to_decimal(&covering));
            if let Some(agree) = agreement {
                println!("agreement={agree}");
            }
        }
        Format::Json => {
            let mut doc = serde_json::json!({
                "shape": shape,
                "method": method_name(args.method),
                "unrestricted": to_decimal(&unrestricted),
                "covering": to_decimal(&covering),
            });
            if let Some((bu, bc)) = &brute {
                doc["bruteforce_unrestricted"] = to_decimal(bu).into();
                doc["bruteforce_covering"] = to_decimal(bc).into();
            }
            if let Some(agree) = agreement {
                doc["agreement"] = agree.into();
            }
            println!("{}", serde_json::to_string_pretty(&doc).expect("valid json"));
        }
        Format::Csv => {
            println!("rows,cols,colweight,method,unrestricted,covering,agreement");
            println!(
                "{},{},{},{},{},{},{}",
                shape.rows,
                shape.cols,
                shape.col_weight,
                method_name(args.method),
                to_decimal(&unrestricted),
                to_decimal(&covering),
                agreement.map(|a| a.to_string()).unwrap_or_default(),
            );
        }
    }

    if agreement == Some(false) {
        return Err(CliError::mismatch(
            "formula and brute-force counts disagree",
        ));
    }
    Ok(())
}

fn method_name(method: Method) -> &'static str {
    match method {
        Method::Formula => "formula",
        Method::Bruteforce => "bruteforce",
        Method::Both => "both",
    }
}

// --- enumerate ----------------------------------------------------------

pub fn enumerate(args: EnumerateArgs) -> Result<(), CliError> {
    let shape = parse_shape(args.rows, args.cols, args.colweight)?;
    let stream =
        enumerate_matrices(&shape, args.coverage, args.cap).map_err(CliError::from_lib)?;
    let limit = args.limit.unwrap_or(u64::MAX) as usize;
    // Streams can hold millions of matrices; print as they come.
    let matrices = stream.take(limit);

    match args.format {
        Format::Text => {
            for (i, m) in matrices.enumerate() {
                if i > 0 {
                    println!();
                }
                println!("{m}");
            }
        }
        Format::Json => {
            // An array of matrix objects, one object per line.
            let mut first = true;
            for m in matrices {
                let obj = serde_json::to_string(&m).expect("valid json");
                if first {
                    print!("[\n  {obj}");
                    first = false;
                } else {
                    print!(",\n  {obj}");
                }
            }
            if first {
                println!("[]");
            } else {
                println!("\n]");
            }
        }
        Format::Csv => {
            println!("index,rows");
            for (i, m) in matrices.enumerate() {
                println!("{},{}", i + 1, m.row_strings().join("|"));
            }
        }
    }
    Ok(())
}

// --- verify -------------------------------------------------------------

pub fn verify(args: VerifyArgs) -> Result<(), CliError> {
    let identities: Vec<IdentityId> = if args.identity == "all" {
        IdentityId::ALL.to_vec()
    } else {
        vec![args
            .identity
            .parse()
            .map_err(|e: matcount::Error| CliError::usage(e.to_string()))?]
    };
    let strict = args.identity != "all";

    let config = match &args.grid_config {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| {
                CliError::usage(format!("cannot read grid config {}: {e}", path.display()))
            })?;
            Some(GridConfig::from_json(&text).map_err(|e| CliError::usage(e.to_string()))?)
        }
        None => None,
    };
    let bounds = BoundOverrides {
        min_n: args.min_n,
        max_n: args.max_n,
        min_k: args.min_k,
        max_k: args.max_k,
        min_p: args.min_p,
        max_p: args.max_p,
        max_kp: args.max_kp,
    };
    let oracle_mode = match args.oracle {
        OracleArg::Off => OracleMode::Off,
        OracleArg::WhenFeasible => OracleMode::WhenFeasible,
        OracleArg::Required => OracleMode::Required,
    };

    let mut runs: Vec<VerifyRun> = Vec::new();
    for id in identities {
        let mut grid = descriptor(id).default_grid;
        if let Some(config) = &config {
            if let Some(over) = config.override_for(id) {
                grid = grid
                    .apply_override(over, strict)
                    .map_err(|e| CliError::usage(e.to_string()))?;
            }
        }
        grid = grid
            .apply_bounds(&bounds, strict)
            .map_err(|e| CliError::usage(e.to_string()))?;
        runs.push(verify_identity(id, &grid, oracle_mode, args.cap));
    }

    match args.format {
        Format::Text => {
            for run in &runs {
                for report in &run.reports {
                    println!("{}", report_line(report));
                }
                let s = run.summary();
                println!(
                    "summary identity={} examined={} reported={} skipped={} passed={} failed={} oracle_errors={}",
                    run.identity, s.examined, s.reported, s.skipped, s.passed, s.failed, s.oracle_errors,
                );
            }
        }
        Format::Json => println!("{}", runs_to_json(&runs)),
        Format::Csv => print!("{}", reports_to_csv(&runs)),
    }

    if runs.iter().all(|r| r.all_passed()) {
        Ok(())
    } else {
        Err(CliError::mismatch("verification failed on some grid points"))
    }
}

fn report_line(report: &IdentityReport) -> String {
    let (oracle, oracle_match) = match &report.oracle {
        OracleStatus::NotRun => ("-".to_string(), "-".to_string()),
        OracleStatus::Ran(v) => (
            to_decimal(v),
            report
                .formula_eq_oracle
                .map(|b| b.to_string())
                .unwrap_or_else(|| "-".into()),
        ),
        OracleStatus::Failed { reason } => (format!("error({reason})"), "-".to_string()),
    };
    format!(
        "{} {} lhs={} rhs={} oracle={} match={} oracle_match={} elapsed_ms={}",
        report.identity,
        report.params,
        to_decimal(&report.lhs),
        to_decimal(&report.rhs),
        oracle,
        report.lhs_eq_rhs,
        oracle_match,
        report.elapsed.as_millis(),
    )
}

// --- table --------------------------------------------------------------

pub fn table(args: TableArgs) -> Result<(), CliError> {
    let id: IdentityId = args
        .identity
        .parse()
        .map_err(|e: matcount::Error| CliError::usage(e.to_string()))?;

    let mut fixed = ParamPoint::default();
    for assignment in &args.set {
        let (name, value) = assignment
            .split_once('=')
            .ok_or_else(|| CliError::usage(format!("--set expects NAME=VALUE, got {assignment:?}")))?;
        let value: u64 = value
            .parse()
            .map_err(|_| CliError::usage(format!("--set value {value:?} is not an integer")))?;
        let slot = match name {
            "n" => &mut fixed.n,
            "k" => &mut fixed.k,
            "p" => &mut fixed.p,
            other => {
                return Err(CliError::usage(format!(
                    "unknown parameter {other:?} in --set (expected n, k or p)"
                )))
            }
        };
        if slot.replace(value).is_some() {
            return Err(CliError::usage(format!("duplicate --set for {name}")));
        }
    }

    let sequence = sequence_emit(id, args.var.name(), (args.from, args.to), &fixed)
        .map_err(|e| CliError::usage(e.to_string()))?;

    let rendered = match args.format {
        Format::Text => {
            let mut out = String::new();
            for (index, value) in &sequence {
                out.push_str(&format!("{index}\t{}\n", to_decimal(value)));
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("index,value\n");
            for (index, value) in &sequence {
                out.push_str(&format!("{index},{}\n", to_decimal(value)));
            }
            out
        }
        Format::Json => {
            let items: Vec<serde_json::Value> = sequence
                .iter()
                .map(|(index, value)| {
                    serde_json::json!({ "index": index, "value": to_decimal(value) })
                })
                .collect();
            let mut out =
                serde_json::to_string_pretty(&items).expect("valid json");
            out.push('\n');
            out
        }
    };

    match &args.output {
        Some(path) => {
            let mut file = fs::File::create(path)
                .map_err(|e| CliError::io(format!("cannot write {}: {e}", path.display())))?;
            file.write_all(rendered.as_bytes())
                .map_err(|e| CliError::io(format!("cannot write {}: {e}", path.display())))?;
        }
        None => print!("{rendered}"),
    }
    Ok(())
}
