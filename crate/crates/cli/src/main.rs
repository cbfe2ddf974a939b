//! `cstring`: construct, verify, reduce and census string C-groups of finite Coxeter groups.
//!
//! Results go to standard output; progress goes to standard error. Exit status is 0 on
//! success, 1 when a verification fails, 2 on usage errors and 3 when a resource cap is hit.

use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cstring_core::census::{census_table, enumerate_rank, CensusOptions, RecordDocument};
use cstring_core::constructions::{dn_even_rank3, dn_even_rank_r, dn_odd_rank_n, sym_skeleton};
use cstring_core::coxeter::{coset_action, coxeter_order, realize, todd_coxeter, CoxeterType, MAX_REGULAR_COSETS};
use cstring_core::cpr::{cpr_graph, to_dot};
use cstring_core::cstring::{verify, GeneratorString, StringDocument};
use cstring_core::permgroup::GroupDocument;
use cstring_core::rankreduce::{reduce, reduce_chain};
use cstring_core::Error;

#[derive(Parser)]
#[command(name = "cstring", version, about = "String C-groups of finite Coxeter groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a generator string from one of the explicit families.
    Construct {
        family: Family,
        #[arg(long)]
        n: usize,
        /// Rank, for `dn-even` and `sym-skeleton`.
        #[arg(long)]
        r: Option<usize>,
        /// Run the C-string check and record the outcome in the output.
        #[arg(long)]
        verify: bool,
    },
    /// Check a string read from a JSON file (`-` for standard input).
    Verify {
        file: PathBuf,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Print the Schläfli type of a string.
    Schlafli { file: PathBuf },
    /// Print the CPR graph of a string.
    Cpr {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
    },
    /// Apply rank reduction once, or repeatedly with `--chain`.
    Reduce {
        file: PathBuf,
        #[arg(long)]
        chain: bool,
    },
    /// Enumerate the C-strings of a Coxeter group up to isomorphism and duality.
    Census {
        group: String,
        /// Only this rank.
        #[arg(long)]
        rank: Option<usize>,
        /// Also enumerate degenerate strings (counted separately).
        #[arg(long)]
        allow_degenerate: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Where to write the JSON atlas of representatives.
        #[arg(long)]
        atlas: Option<PathBuf>,
    },
    /// Order of a Coxeter group by recursive coset enumeration.
    Order { group: String },
    /// A faithful permutation representation, or the action on cosets of a parabolic.
    CoxeterRep {
        group: String,
        /// 1-based generator indices of the parabolic subgroup.
        #[arg(long, value_delimiter = ',')]
        parabolic: Option<Vec<usize>>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    DnOdd,
    DnEvenRank3,
    DnEven,
    SymSkeleton,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Debug, thiserror::Error)]
enum Failure {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Verification(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Core(Error::CapExceeded { .. } | Error::CosetLimit(_)) => 3,
            _ => 2,
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info"))
        .format_timestamp(None)
        .init();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Construct { family, n, r, verify: check } => construct(family, n, r, check),
        Command::Verify { file, json } => verify_file(&file, json),
        Command::Schlafli { file } => {
            let s = read_string(&file)?;
            println!("{}", braces(&cstring_core::cstring::schlafli(&s)));
            Ok(())
        }
        Command::Cpr { file, format } => {
            let graph = cpr_graph(&read_string(&file)?)?;
            match format {
                GraphFormat::Dot => print!("{}", to_dot(&graph)),
                GraphFormat::Json => println!("{}", serde_json::to_string(&graph)?),
            }
            Ok(())
        }
        Command::Reduce { file, chain } => reduce_file(&file, chain),
        Command::Census {
            group,
            rank,
            allow_degenerate,
            jobs,
            atlas,
        } => census(&group, rank, CensusOptions { allow_degenerate, jobs }, atlas),
        Command::Order { group } => {
            println!("{}", coxeter_order(&parse_group(&group)?.matrix())?);
            Ok(())
        }
        Command::CoxeterRep { group, parabolic } => coxeter_rep(&group, parabolic),
    }
}

fn construct(family: Family, n: usize, r: Option<usize>, check: bool) -> Outcome {
    let need_r = || r.ok_or_else(|| Failure::Usage("this family needs --r".into()));
    let s = match family {
        Family::DnOdd => dn_odd_rank_n(n)?,
        Family::DnEvenRank3 => dn_even_rank3(n)?,
        Family::DnEven => dn_even_rank_r(n, need_r()?)?,
        Family::SymSkeleton => sym_skeleton(n, need_r()?)?,
    };
    let verified = check && verify(&s)?.is_cstring();
    println!("{}", serde_json::to_string(&StringDocument::new(&s, verified))?);
    if check && !verified {
        return Err(Failure::Verification("constructed string is not a C-string".into()));
    }
    Ok(())
}

fn verify_file(file: &Path, json: bool) -> Outcome {
    let s = read_string(file)?;
    let report = verify(&s)?;
    if json {
        let value = serde_json::json!({
            "rank": report.rank,
            "string_property": report.string_property,
            "intersection_property": report.intersection_property,
            "group_order": report.group_order,
            "schlafli": report.schlafli,
            "degenerate": report.degenerate,
            "cstring": report.is_cstring(),
        });
        println!("{value}");
    } else {
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        println!("rank: {}", report.rank);
        println!("string property: {}", yes_no(report.string_property));
        println!(
            "intersection property: {}",
            report.intersection_property.map_or("not checked", yes_no)
        );
        println!("group order: {}", report.group_order);
        println!("schlafli: {}", braces(&report.schlafli));
        println!("degenerate: {}", yes_no(report.degenerate));
        println!("C-string: {}", yes_no(report.is_cstring()));
    }
    if report.is_cstring() {
        Ok(())
    } else {
        Err(Failure::Verification("not a C-string".into()))
    }
}

fn reduce_file(file: &Path, chain: bool) -> Outcome {
    let s = read_string(file)?;
    if !verify(&s)?.is_cstring() {
        return Err(Failure::Verification("input is not a C-string".into()));
    }
    if chain {
        let c = reduce_chain(&s)?;
        log::info!("ranks {:?}, parity prediction t = {:?}", c.ranks(), c.predicted_t);
        let docs: Vec<_> = c
            .stages
            .iter()
            .map(|st| StringDocument::new(st, true))
            .collect();
        println!("{}", serde_json::to_string(&docs)?);
    } else {
        println!("{}", serde_json::to_string(&StringDocument::new(&reduce(&s)?, true))?);
    }
    Ok(())
}

fn census(name: &str, rank: Option<usize>, options: CensusOptions, atlas: Option<PathBuf>) -> Outcome {
    let ty = parse_group(name)?;
    let group = realize(ty)?.group;
    let records = match rank {
        Some(r) => {
            let records = enumerate_rank(&group, r, &options)?;
            let count = |deg: bool| {
                let rs: Vec<_> = records.iter().filter(|x| x.degenerate == deg).collect();
                (rs.len(), rs.iter().filter(|x| x.self_dual).count())
            };
            let (total, sd) = count(false);
            print!("rank {r}: {total} ({sd} self-dual)");
            if options.allow_degenerate {
                let (total, sd) = count(true);
                print!("; degenerate {total} ({sd} self-dual)");
            }
            println!();
            records
        }
        None => {
            let table = census_table(&group, &options)?;
            println!("{ty}");
            println!("{table}");
            table.records
        }
    };
    let path = atlas.unwrap_or_else(|| PathBuf::from(format!("atlas-{ty}.json")));
    let docs: Vec<RecordDocument> = records.iter().map(|r| r.document()).collect();
    let text = serde_json::to_string_pretty(&docs)?;
    fs::write(&path, text + "\n").map_err(|source| Failure::Io {
        path: path.display().to_string(),
        source,
    })?;
    log::info!("wrote {} records to {}", docs.len(), path.display());
    Ok(())
}

fn coxeter_rep(name: &str, parabolic: Option<Vec<usize>>) -> Outcome {
    let ty = parse_group(name)?;
    let group = match parabolic {
        None => realize(ty)?.group,
        Some(indices) => {
            let rank = ty.rank();
            if let Some(&bad) = indices.iter().find(|&&i| i == 0 || i > rank) {
                return Err(Failure::Usage(format!("parabolic index {bad} outside 1..={rank}")));
            }
            let zero_based: Vec<usize> = indices.iter().map(|i| i - 1).collect();
            coset_action(&todd_coxeter(&ty.matrix(), &zero_based, MAX_REGULAR_COSETS)?)
        }
    };
    println!("{}", serde_json::to_string(&GroupDocument::from(&group))?);
    Ok(())
}

fn parse_group(name: &str) -> Result<CoxeterType, Failure> {
    Ok(name.parse::<CoxeterType>()?)
}

fn read_string(file: &Path) -> Result<GeneratorString, Failure> {
    let io_err = |source| Failure::Io {
        path: file.display().to_string(),
        source,
    };
    let text = if file == Path::new("-") {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf).map_err(io_err)?;
        buf
    } else {
        fs::read_to_string(file).map_err(io_err)?
    };
    let doc: StringDocument = serde_json::from_str(&text)?;
    Ok(doc.to_string_group()?)
}

fn braces(values: &[u64]) -> String {
    let inner: Vec<String> = values.iter().map(u64::to_string).collect();
    format!("{{{}}}", inner.join(","))
}
