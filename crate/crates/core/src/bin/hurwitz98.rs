fn main() -> std::process::ExitCode {
    hurwitz98::cli::main()
}
