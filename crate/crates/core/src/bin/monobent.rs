fn main() -> std::process::ExitCode {
    monobent::cli::main()
}
