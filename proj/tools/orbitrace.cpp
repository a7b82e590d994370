#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "orbitrace/errors.hpp"
#include "orbitrace/report.hpp"

namespace {

constexpr int kSchemaError = 2;
constexpr int kComputationError = 3;
constexpr int kDisagreement = 4;

void emit(const orbitrace::report::json& j, const std::string& format)
{
  if (format == "text")
    std::cout << orbitrace::report::render_text(j);
  else
    std::cout << j.dump(2) << "\n";
}

orbitrace::report::json read_json(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw orbitrace::SchemaError("cannot open " + path);
  try {
    return orbitrace::report::json::parse(in);
  } catch (const orbitrace::report::json::exception& e) {
    throw orbitrace::SchemaError(e.what());
  }
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Exact S1-Euler characteristic calculator"};
  app.require_subcommand(1);
  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  auto* report = app.add_subcommand("report", "Report all invariants of one input");
  std::string kind;
  std::string file;
  report->add_option("--kind", kind, "Input kind")
      ->required()
      ->check(CLI::IsMember({"seifert", "s1cw", "t2cw"}));
  report->add_option("file", file, "Input JSON file")->required();

  auto* cross = app.add_subcommand("crosscheck", "Run every JSON input in a directory");
  std::string dir;
  cross->add_option("dir", dir, "Corpus directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kSchemaError;
  }

  try {
    if (*report) {
      const auto out = orbitrace::report::run(orbitrace::report::parse_kind(kind), read_json(file));
      emit(out.report, format);
      return out.agreement ? 0 : kDisagreement;
    }
    const auto res = orbitrace::report::crosscheck(dir);
    emit(res.summary, format);
    if (res.failed > 0)
      return kDisagreement;
    return res.errors > 0 ? kComputationError : 0;
  } catch (const orbitrace::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kSchemaError;
  } catch (const orbitrace::InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kSchemaError;
  } catch (const std::exception& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return kComputationError;
  }
}
