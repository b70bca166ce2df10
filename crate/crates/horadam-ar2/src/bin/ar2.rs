fn main() {
    std::process::exit(horadam_ar2::cli::run());
}
