// End-to-end checks of the command-line binary: schema-valid JSON, pinned
// values, byte-identical reruns, exit codes. argv[1] = binary, argv[2] =
// schema directory.

#include "support/schema_subset.hpp"

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <sys/wait.h>

namespace {

int g_failures = 0;
std::string g_binary, g_schemas;

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env_prefix = "") {
    RunResult r;
    std::string cmd = env_prefix + "'" + g_binary + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

void check(bool cond, const std::string& what) {
    if (cond) {
        std::cout << "[ok] " << what << "\n";
    } else {
        std::cout << "[FAIL] " << what << "\n";
        ++g_failures;
    }
}

nlohmann::json schema(const std::string& name) {
    std::ifstream in(g_schemas + "/" + name);
    nlohmann::json j;
    in >> j;
    return j;
}

nlohmann::json check_json(const std::string& args, const std::string& schema_name) {
    RunResult r = run(args);
    check(r.status == 0, args + " exits 0");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(r.out);
    } catch (const std::exception& e) {
        check(false, args + " emits parseable JSON");
        return doc;
    }
    schema_subset::Registry reg{{"series", schema("series.schema.json")}};
    auto errors = schema_subset::validate_against(schema(schema_name), doc, reg);
    for (const auto& e : errors) std::cout << "       " << e << "\n";
    check(errors.empty(), args + " validates against " + schema_name);
    return doc;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: cli_check <binary> <schema-dir>\n";
        return 2;
    }
    g_binary = argv[1];
    g_schemas = argv[2];

    auto count = check_json("count -d 2 -n 2 --format json", "count.schema.json");
    check(count["evals"]["q=2"] == "35", "count d=2 n=2 evaluates to 35 at q=2");
    check(count["count"]["4"] == "1/2", "count d=2 n=2 has coefficient 1/2 at q^4");

    check_json("euler --d-max 4 --n-max 3 --format json", "euler.schema.json");

    auto carlitz = check_json("carlitz -q 2 -n 2 --d-max 4 --format json", "carlitz.schema.json");
    check(carlitz["rows"][3]["ratio"] == "26089/16384", "carlitz d=4 ratio exact");

    auto hyde = check_json("hyde -d 2 -K 1 --n-max 12 --format json", "hyde.schema.json");
    check(hyde["found"] == true && hyde["n0"] == 2, "hyde d=2 K=1 stabilizes at n0=2");
    check(hyde["coefficients"]["q^1"] == "-1/2", "hyde d=2 coefficient of q is -1/2");

    auto betti = check_json("betti -d 4 --max-degree 11 --convention naive --format json",
                            "betti.schema.json");
    check(betti["betti"]["b_11"] == "1", "betti d=4 naive has b_11 = 1");
    check(betti["diverges_from_reference"] == false, "betti d=4 naive matches reference");

    auto koszul = check_json("betti -d 4 --max-degree 11 --convention koszul --format json",
                             "betti.schema.json");
    check(koszul["betti"]["b_11"] == "0" && koszul["diverges_from_reference"] == true,
          "betti d=4 koszul flags the divergence");

    check_json("e1 -d 4 --max-degree 10 --convention naive --format json",
               "e1window.schema.json");
    check_json("bounds -d 4 -n 30 --format json", "bounds.schema.json");
    check_json("series -d 2 --trunc 12 --format json", "series.schema.json");

    auto cmp = check_json("series -d 3 --trunc 20 --compare --format json",
                          "series_comparison.schema.json");
    check(cmp["agrees"] == false && cmp["first_divergence"] == 12,
          "series d=3 comparison flags degree 12");

    check_json("brute -d 2 -n 2 -p 2 --format json", "census.schema.json");
    auto verify = check_json("brute --verify --format json", "verify.schema.json");
    check(verify["all_pass"] == true, "brute --verify passes");

    check_json("audit --d-max 4 --format json", "audit.schema.json");

    // CSV surface
    RunResult census_csv = run("brute -d 2 -n 2 -p 2 --format csv");
    check(census_csv.status == 0 &&
              census_csv.out.rfind("p,n,d,partition,count\n", 0) == 0 &&
              census_csv.out.find("2,2,2,1+1,21") != std::string::npos,
          "census CSV has the pinned columns and rows");

    // byte-identical reruns
    for (const std::string& args :
         {std::string("count -d 3 -n 2 --format json"),
          std::string("e1 -d 4 --max-degree 10 --convention naive --format md"),
          std::string("brute --verify --format csv"),
          std::string("carlitz -q 3 -n 2 --d-max 6 --format csv")}) {
        RunResult a = run(args), b = run(args);
        check(a.status == 0 && a.out == b.out, "deterministic: " + args);
    }

    // results are independent of the thread count
    {
        RunResult one = run("brute --verify --format csv", "IRRPOLY_THREADS=1 ");
        RunResult four = run("brute --verify --format csv", "IRRPOLY_THREADS=4 ");
        check(one.status == 0 && one.out == four.out,
              "brute --verify output independent of IRRPOLY_THREADS");
        RunResult e1 = run("euler --d-max 6 --n-max 5 --format csv", "IRRPOLY_THREADS=1 ");
        RunResult e4 = run("euler --d-max 6 --n-max 5 --format csv", "IRRPOLY_THREADS=4 ");
        check(e1.status == 0 && e1.out == e4.out,
              "euler table independent of IRRPOLY_THREADS");
    }

    check(run("--help").status == 0, "--help exits 0");

    // failure modes: clear messages, nonzero exits
    check(run("series -d 4").status != 0, "series -d 4 is refused (stable form unknown)");
    check(run("count -d 0 -n 2").status != 0, "count -d 0 is refused");
    check(run("carlitz -q 2 -n 1").status != 0, "carlitz -n 1 is refused");
    check(run("betti -d 5").status != 0, "betti -d 5 is refused");
    check(run("brute -d 9 -n 3 -p 5").status != 0, "over-budget brute request is refused");
    check(run("count -d 40 -n 8").status != 0, "oversized symbolic request is refused");
    check(run("brute --verify --tuple 2,2,2 --tuple 3,2,2").status == 0,
          "explicit verify tuples pass");
    check(run("count -d 2 -n 2 --format yaml").status != 0, "unknown format is refused");

    // --out writes the same bytes as stdout
    {
        RunResult direct = run("count -d 2 -n 2 --format json");
        std::string path = "cli_check_out.json";
        RunResult filed = run("count -d 2 -n 2 --format json --out " + path);
        std::ifstream in(path, std::ios::binary);
        std::string content((std::istreambuf_iterator<char>(in)),
                            std::istreambuf_iterator<char>());
        std::remove(path.c_str());
        check(filed.status == 0 && content == direct.out, "--out matches stdout bytes");
    }

    if (g_failures == 0)
        std::cout << "cli_check: all checks passed\n";
    else
        std::cout << "cli_check: " << g_failures << " FAILED\n";
    return g_failures;
}
