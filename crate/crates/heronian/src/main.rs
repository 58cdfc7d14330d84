use clap::Parser;

use heronian::cli::RunConfig;
use heronian::Error;

fn main() {
    // clap itself exits with code 2 on unparseable arguments
    let config = RunConfig::parse();
    match heronian::cli::run(config, &mut std::io::stdout()) {
        Ok(()) => {}
        Err(e @ Error::Usage(_)) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(1);
        }
    }
}
