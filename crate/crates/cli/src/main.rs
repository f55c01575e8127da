//! `isokit`: exact checks, witnesses, and bordism classes for semifree
//! circle-action isotropy data.
//!
//! Input is JSON, either inline, a file path, or `-` for stdin. Exit codes:
//! `0` success, `1` malformed input (diagnostic names the field), `2` input
//! that is well-formed but fails the identities / is not realizable.

use std::fs;
use std::io::Read;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use isokit_core::bordism::bordism_class;
use isokit_core::identities::{check_identities, identity_i, IdentityReport};
use isokit_core::json;
use isokit_core::realization::{realize, rep_sphere_data, sphere_power_data, Witness};
use isokit_core::{BigInt, IsotropyData, KClass, NotRealizable};

const EXIT_UNSATISFIED: u8 = 2;

#[derive(Parser)]
#[command(
    name = "isokit",
    version,
    about = "Exact checks, witnesses, and bordism classes for semifree circle-action isotropy data"
)]
struct Cli {
    /// Output format; the ISOKIT_FORMAT environment variable overrides the
    /// default, an explicit flag wins over both
    #[arg(long, global = true, value_enum, env = "ISOKIT_FORMAT", default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the localization identities; exit 0 iff they all hold
    Check {
        /// Input data: file path, inline JSON, directory of .json files, or '-' for stdin
        #[arg(default_value = "-")]
        input: String,
    },
    /// Decide realizability; print a witness or the defect report
    Realize {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Compute the bordism class of realizable data
    Bordism {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Print the identity values I_i for i = 0..=max-degree
    Identities {
        #[arg(default_value = "-")]
        input: String,
        /// Highest index to evaluate (defaults to n)
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Print the class in Z[t, tbar]
    Kclass {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Generate the isotropy data of a named example manifold
    Gen {
        #[command(subcommand)]
        family: GenCommand,
    },
}

#[derive(Subcommand)]
enum GenCommand {
    /// The n-fold power of the standard 2-sphere
    SpherePower {
        #[arg(long)]
        n: u32,
    },
    /// The unit sphere of V_j plus a trivial real line
    RepSphere {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        j: u32,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    let format = cli.format;
    match cli.command {
        Command::Check { input } => run_check(&input, format),
        Command::Realize { input } => run_realize(&input, format),
        Command::Bordism { input } => run_bordism(&input, format),
        Command::Identities { input, max_degree } => run_identities(&input, max_degree, format),
        Command::Kclass { input } => run_kclass(&input, format),
        Command::Gen { family } => run_gen(family, format),
    }
}

fn read_input(input: &str) -> Result<String, String> {
    if input == "-" {
        let mut buffer = String::new();
        std::io::stdin()
            .read_to_string(&mut buffer)
            .map_err(|e| format!("cannot read stdin: {e}"))?;
        Ok(buffer)
    } else if input.trim_start().starts_with('{') {
        Ok(input.to_string())
    } else {
        fs::read_to_string(input).map_err(|e| format!("cannot read {input}: {e}"))
    }
}

fn load_data(input: &str) -> Result<IsotropyData, String> {
    let text = read_input(input)?;
    json::data_from_json(&text).map_err(|e| e.to_string())
}

fn run_check(input: &str, format: Format) -> Result<u8, String> {
    if input != "-" && Path::new(input).is_dir() {
        return run_check_directory(Path::new(input), format);
    }
    let data = load_data(input)?;
    let report = check_identities(&data);
    match format {
        Format::Json => println!("{}", json::identity_report_json(&data, &report)),
        Format::Table => print_check_table(&data, &report),
    }
    Ok(if report.satisfied() { 0 } else { EXIT_UNSATISFIED })
}

/// Batch mode: checks every .json file in the directory (sorted by name).
/// Exits 0 iff all of them satisfy the identities.
fn run_check_directory(dir: &Path, format: Format) -> Result<u8, String> {
    let mut files: Vec<_> = fs::read_dir(dir)
        .map_err(|e| format!("cannot read {}: {e}", dir.display()))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|path| path.extension().is_some_and(|ext| ext == "json"))
        .collect();
    files.sort();
    if files.is_empty() {
        return Err(format!("no .json files in {}", dir.display()));
    }

    let mut all_hold = true;
    for path in files {
        let text = fs::read_to_string(&path)
            .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        let data = json::data_from_json(&text)
            .map_err(|e| format!("{}: {e}", path.display()))?;
        let report = check_identities(&data);
        all_hold &= report.satisfied();
        match format {
            Format::Json => println!(
                "{{\"file\":{},\"n\":{},\"identities_hold\":{}}}",
                json_string(&path.display().to_string()),
                data.n(),
                report.satisfied()
            ),
            Format::Table => {
                let verdict = if report.satisfied() { "hold" } else { "violated" };
                println!("{}  {verdict}", path.display());
            }
        }
    }
    Ok(if all_hold { 0 } else { EXIT_UNSATISFIED })
}

fn run_realize(input: &str, format: Format) -> Result<u8, String> {
    let data = load_data(input)?;
    match realize(&data) {
        Ok(witness) => {
            match format {
                Format::Json => println!("{}", json::witness_to_json(&witness)),
                Format::Table => print_witness_table(&witness),
            }
            Ok(0)
        }
        Err(not_realizable) => {
            print_not_realizable(&not_realizable, format);
            Ok(EXIT_UNSATISFIED)
        }
    }
}

fn run_bordism(input: &str, format: Format) -> Result<u8, String> {
    let data = load_data(input)?;
    match bordism_class(&data) {
        Ok(class) => {
            match format {
                Format::Json => println!("{}", json::bordism_to_json(&class)),
                Format::Table => println!("class  {class}"),
            }
            Ok(0)
        }
        Err(not_realizable) => {
            print_not_realizable(&not_realizable, format);
            Ok(EXIT_UNSATISFIED)
        }
    }
}

fn run_identities(input: &str, max_degree: Option<u32>, format: Format) -> Result<u8, String> {
    let data = load_data(input)?;
    let max_degree = max_degree.unwrap_or(data.n());
    let values: Vec<(u32, BigInt)> = (0..=max_degree)
        .map(|i| (i, identity_i(&data, i)))
        .collect();
    match format {
        Format::Json => {
            let entries: Vec<String> = values
                .iter()
                .map(|(i, v)| format!("{{\"i\":{i},\"value\":{v}}}"))
                .collect();
            println!(
                "{{\"n\":{},\"max_degree\":{max_degree},\"values\":[{}]}}",
                data.n(),
                entries.join(",")
            );
        }
        Format::Table => {
            println!("n           {}", data.n());
            println!("  i  I_i");
            for (i, v) in &values {
                println!("{i:>3}  {v}");
            }
        }
    }
    Ok(0)
}

fn run_kclass(input: &str, format: Format) -> Result<u8, String> {
    let data = load_data(input)?;
    let k = data.k_class();
    match format {
        Format::Json => println!(
            "{{\"n\":{},\"terms\":{}}}",
            data.n(),
            json::kclass_terms_json(&k)
        ),
        Format::Table => print_kclass_table(data.n(), &k),
    }
    Ok(0)
}

fn run_gen(family: GenCommand, format: Format) -> Result<u8, String> {
    let data = match family {
        GenCommand::SpherePower { n } => sphere_power_data(n),
        GenCommand::RepSphere { n, j } => rep_sphere_data(n, j).map_err(|e| e.to_string())?,
    };
    match format {
        Format::Json => println!("{}", json::data_to_json(&data).map_err(|e| e.to_string())?),
        Format::Table => print_data_table(&data),
    }
    Ok(0)
}

fn print_not_realizable(not_realizable: &NotRealizable, format: Format) {
    match format {
        Format::Json => println!("{}", json::not_realizable_to_json(not_realizable)),
        Format::Table => {
            println!("realizable  false");
            println!("  j  residual");
            for defect in &not_realizable.defects {
                println!("{:>3}  {}", defect.j, defect.residual);
            }
        }
    }
}

fn print_check_table(data: &IsotropyData, report: &IdentityReport) {
    let table = data.multiplicities();
    println!("n           {}", report.n());
    println!("points      {}", data.point_count());
    println!(
        "identities  {}",
        if report.satisfied() { "hold" } else { "violated" }
    );
    if !report.residuals().is_empty() {
        println!("  i  I_i");
        for (i, residual) in report.residuals().iter().enumerate() {
            println!("{i:>3}  {residual}");
        }
    }
    println!("m_plus      {}", join_display(table.m_plus().iter()));
    println!("m_minus     {}", join_display(table.m_minus().iter()));
    println!("m           {}", join_display(table.m().iter()));
}

fn print_witness_table(witness: &Witness) {
    println!("realizable   true");
    println!("n            {}", witness.n());
    println!("m0           {}", witness.m0());
    println!("rep_spheres  {}", join_display(witness.rep_spheres().iter()));
}

fn print_kclass_table(n: u32, k: &KClass) {
    println!("n        {n}");
    println!("k_class  {k}");
}

fn print_data_table(data: &IsotropyData) {
    println!("n       {}", data.n());
    println!("points  {}", data.point_count());
    println!("  j  sign  count");
    for (rep, sign, count) in data.support() {
        println!("{:>3}  {:>4}  {count}", rep.j(), sign.value());
    }
}

fn join_display<T: std::fmt::Display>(items: impl Iterator<Item = T>) -> String {
    let parts: Vec<String> = items.map(|item| item.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn json_string(raw: &str) -> String {
    let mut out = String::with_capacity(raw.len() + 2);
    out.push('"');
    for c in raw.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}
