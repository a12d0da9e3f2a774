use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use exrep_cli::commands::{
    cmd_chars, cmd_classify, cmd_scan, cmd_verify_example, load_fixture, parse_fixture,
    ClassifyArgs, ScanArgs, P59_FIXTURE_JSON,
};
use exrep_cli::error::CliError;
use exrep_cli::render::render_text;
use exrep_cli::report::ReportDocument;
use exrep_core::permrep::GroupTag;

#[derive(Parser)]
#[command(
    name = "exrep",
    about = "Exact checks for locally induced Galois representations with exceptional \
             residual image: level-one eigensystems mod p, S4/A5 character theory, and \
             the obstruction and vanishing pipelines.",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Embed wall-clock timings in the report (breaks byte-identical
    /// reruns; timings otherwise go to stderr).
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one (p, k): obstructions, eigensystems, optional vanishing
    /// verdict from a class-number fixture.
    Classify {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        k: u64,
        /// Class-number fixture (JSON) enabling the vanishing verdict.
        #[arg(long)]
        fixture: Option<PathBuf>,
        /// Fail with a data error unless the vanishing verdict can be
        /// computed.
        #[arg(long)]
        require_theorem2: bool,
        /// Record eigenvalues a_ell for primes ell up to this bound.
        #[arg(long, default_value_t = 100)]
        lbound: u64,
        /// Override the q-expansion precision (the minimal sufficient
        /// precision is used when absent; too-small values surface as
        /// precision errors).
        #[arg(long)]
        precision_override: Option<usize>,
    },
    /// Scan odd primes p <= p-max and even weights 12 <= k <= min(k-max,
    /// p+1) for a_p ≡ 0 (mod p).
    Scan {
        #[arg(long, default_value_t = 300)]
        p_max: u64,
        #[arg(long, default_value_t = 30)]
        k_max: u64,
        /// Refuse p-max above this ceiling (runtime grows roughly
        /// quadratically).
        #[arg(long, default_value_t = 300)]
        ceiling: u64,
        /// Worker threads; 0 uses the rayon default. Reports are
        /// byte-identical at every setting.
        #[arg(long, default_value_t = 0)]
        parallelism: usize,
    },
    /// Print the character table of S4, A5, a dihedral or a cyclic group.
    Chars {
        /// s4 | a5 | dihedral | cyclic
        group: String,
        /// Parameter for dihedral (order 2d) and cyclic (order d) groups.
        #[arg(long)]
        d: Option<u32>,
    },
    /// Run the end-to-end verification of the p = 59, k = 16 example.
    VerifyExample {
        /// Override the shipped fixture.
        #[arg(long)]
        fixture: Option<PathBuf>,
        /// Prime bound for the u-statistic stage.
        #[arg(long, default_value_t = 1000)]
        lbound: u64,
    },
}

fn parse_group(name: &str, d: Option<u32>) -> Result<GroupTag, CliError> {
    match name.to_ascii_lowercase().as_str() {
        "s4" => Ok(GroupTag::S4),
        "a5" => Ok(GroupTag::A5),
        "dihedral" => {
            let d = d.ok_or_else(|| {
                CliError::Usage(String::from("dihedral needs --d (the group has order 2d)"))
            })?;
            Ok(GroupTag::Dihedral(d))
        }
        "cyclic" => {
            let d = d.ok_or_else(|| {
                CliError::Usage(String::from("cyclic needs --d (the group order)"))
            })?;
            Ok(GroupTag::Cyclic(d))
        }
        other => Err(CliError::Usage(format!(
            "unknown group '{}': expected s4, a5, dihedral or cyclic",
            other
        ))),
    }
}

fn run(cli: &Cli) -> Result<ReportDocument, CliError> {
    match &cli.command {
        Command::Classify {
            p,
            k,
            fixture,
            require_theorem2,
            lbound,
            precision_override,
        } => {
            let fixture_data = fixture.as_deref().map(load_fixture).transpose()?;
            let args = ClassifyArgs {
                p: *p,
                k: *k,
                fixture: fixture_data,
                require_theorem2: *require_theorem2,
                lbound: *lbound,
                precision_override: *precision_override,
            };
            let mut echo = format!("classify --p {} --k {} --lbound {}", p, k, lbound);
            if let Some(path) = fixture {
                echo.push_str(&format!(" --fixture {}", path.display()));
            }
            if *require_theorem2 {
                echo.push_str(" --require-theorem2");
            }
            if let Some(prec) = precision_override {
                echo.push_str(&format!(" --precision-override {}", prec));
            }
            let mut doc = ReportDocument::new(echo);
            doc.classify = Some(cmd_classify(&args)?);
            Ok(doc)
        }
        Command::Scan {
            p_max,
            k_max,
            ceiling,
            parallelism,
        } => {
            let args = ScanArgs {
                p_max: *p_max,
                k_max: *k_max,
                ceiling: *ceiling,
                parallelism: *parallelism,
            };
            // Parallelism is an execution detail, not part of the
            // deterministic command echo.
            let mut doc =
                ReportDocument::new(format!("scan --p-max {} --k-max {}", p_max, k_max));
            doc.scan = Some(cmd_scan(&args)?);
            Ok(doc)
        }
        Command::Chars { group, d } => {
            let tag = parse_group(group, *d)?;
            let mut echo = format!("chars {}", group.to_ascii_lowercase());
            if let Some(d) = d {
                echo.push_str(&format!(" --d {}", d));
            }
            let mut doc = ReportDocument::new(echo);
            doc.chars = Some(cmd_chars(tag)?);
            Ok(doc)
        }
        Command::VerifyExample { fixture, lbound } => {
            let fixture_data = match fixture {
                Some(path) => load_fixture(path)?,
                None => parse_fixture(P59_FIXTURE_JSON)?,
            };
            let mut echo = format!("verify-example --lbound {}", lbound);
            if let Some(path) = fixture {
                echo.push_str(&format!(" --fixture {}", path.display()));
            }
            let mut doc = ReportDocument::new(echo);
            doc.verify_example = Some(cmd_verify_example(&fixture_data, *lbound)?);
            Ok(doc)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli) {
        Ok(mut doc) => {
            let elapsed = start.elapsed().as_millis() as u64;
            if cli.timings {
                doc.timings_ms = Some(elapsed);
            }
            match cli.format {
                Format::Text => print!("{}", render_text(&doc)),
                Format::Json => println!("{}", doc.to_json()),
            }
            eprintln!("elapsed: {} ms", elapsed);
            // A verification report with a failed stage exits with the
            // mismatch code after the report has been printed.
            if let Some(verify) = &doc.verify_example {
                if !verify.passed {
                    eprintln!("error: verify-example: a stage did not match its expected value");
                    return ExitCode::from(5);
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
