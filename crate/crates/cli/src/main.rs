use clap::error::ErrorKind;
use clap::Parser;

fn main() {
    let config = match mexpart::RunConfig::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => mexpart::exit::OK,
                _ => mexpart::exit::USAGE,
            };
            std::process::exit(code);
        }
    };
    std::process::exit(mexpart::execute(&config));
}
