// CLI integration checks: flag grammar, exit codes, output bytes, and
// round-trips through the formats each subcommand emits.
// Usage: test_cli <path-to-conglab-binary>

#include "conglab/partitions.hpp"
#include "conglab/qseries.hpp"
#include "helpers.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
    if (!ok) {
        std::cout << "FAIL " << what << '\n';
        ++failures;
    }
}

std::filesystem::path scratch;
std::string binary;

int run(const std::string& args, const std::string& stdout_file = "stdout.txt") {
    std::string cmd = "\"" + binary + "\" " + args;
    cmd += " > " + (scratch / stdout_file).string();
    cmd += " 2> " + (scratch / "stderr.txt").string();
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& name) {
    std::ifstream in(scratch / name, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void put(const std::string& name, const std::string& text) {
    std::ofstream out(scratch / name, std::ios::binary);
    out << text;
}

void test_census() {
    int rc = run("census --sequence partition --modulus 5 --xmax 10",
                 "census10.csv");
    check(rc == 3, "census xmax=10 exits 3 (class 4 unhit)");
    std::string csv = slurp("census10.csv");
    check(csv.find("0,10,3,") != std::string::npos, "census count r=0 is 3");
    check(csv.find("1,10,2,") != std::string::npos, "census count r=1 is 2");
    check(csv.find("2,10,4,") != std::string::npos, "census count r=2 is 4");
    check(csv.find("3,10,1,") != std::string::npos, "census count r=3 is 1");
    check(csv.find("4,10,0,") != std::string::npos, "census count r=4 is 0");

    check(run("census --sequence partition --modulus 5 --xmax 4") == 3,
          "census xmax=4 exits 3");
    check(run("census --sequence partition --xmax 10") == 2,
          "missing --modulus exits 2");
    check(run("census --sequence nonsense --modulus 5 --xmax 10") == 2,
          "bad sequence exits 2");
    check(run("census --sequence partition --modulus 5 --xmax 99999999999") ==
              4,
          "memory cap exits 4");

    // a modulus where every class is hit: exit 0
    check(run("census --sequence partition --modulus 2 --xmax 100") == 0,
          "census mod 2 exits 0");

    // regular sequence agrees with the library table
    int rc2 = run("census --sequence regular:3,1 --modulus 3 --xmax 50",
                  "census_reg.csv");
    check(rc2 == 0, "regular census exits 0");

    // file-backed sequence: same counts as the partition one
    conglab::PartitionTable t =
        conglab::p_table(conglab::Modulus(5), 10);
    put("pt.qs", conglab::serialize(
                     conglab::QSeries(conglab::Modulus(5), t.values)));
    int rc3 = run("census --sequence file:" + (scratch / "pt.qs").string() +
                      " --modulus 5 --xmax 10",
                  "census_file.csv");
    check(rc3 == 3, "file census exits 3");
    check(slurp("census_file.csv") == csv, "file census matches partition census");
}

void test_hecke() {
    put("q.qs", "QS1 modulus=97 prec=100\n1 1\n");
    int rc = run("hecke --input " + (scratch / "q.qs").string() +
                     " --weight half:1 --level 4 --p 3",
                 "heckeq.qs");
    check(rc == 0, "hecke half:1 p=3 exits 0");
    check(slurp("heckeq.qs") == "QS1 modulus=97 prec=11\n1 96\n9 3\n",
          "hecke output bytes are pinned");

    // empty --p list: byte-identical copy
    int rc2 = run("hecke --input " + (scratch / "q.qs").string() +
                      " --weight half:1 --level 4",
                  "heckeid.qs");
    check(rc2 == 0, "hecke with no primes exits 0");
    check(slurp("heckeid.qs") == slurp("q.qs"), "empty composition copies input");

    check(run("hecke --input " + (scratch / "q.qs").string() +
              " --weight half:1 --level 4 --p 2") == 2,
          "half-integral p=2 exits 2");
    check(run("hecke --input " + (scratch / "q.qs").string() +
              " --weight half:1 --level 6 --p 3") == 2,
          "level not divisible by 4 exits 2");
    check(run("hecke --input " + (scratch / "q.qs").string() +
              " --weight half:1 --level 4 --p 3 --p 5") == 5,
          "exhausted precision exits 5");
    check(run("hecke --input " + (scratch / "missing.qs").string() +
              " --weight int:2") == 2,
          "missing input exits 2");

    put("bad.qs", "QS1 modulus=4 prec=2\n1 7\n");
    check(run("hecke --input " + (scratch / "bad.qs").string() +
              " --weight int:2") == 2,
          "malformed QS1 exits 2");

    // output round-trips through the QS1 module
    conglab::QSeries out = conglab::deserialize(slurp("heckeq.qs"));
    check(conglab::serialize(out) == slurp("heckeq.qs"),
          "hecke output round-trips");
}

void test_pis() {
    put("primes.txt", "2\n3\n5\n");
    int rc = run("pis --set file:" + (scratch / "primes.txt").string() +
                     " --s 2 --x 15",
                 "pis.txt");
    check(rc == 0, "pis exits 0");
    check(slurp("pis.txt") == "3\n", "pis prints 3");

    check(run("pis --set all --s 1 --x 100", "pis_all.txt") == 0,
          "pis all exits 0");
    check(slurp("pis_all.txt") == "25\n", "pi(100) = 25");

    check(run("pis --set class:1,4 --s 2 --x 100", "pis_cls.txt") == 0,
          "pis class exits 0");
    check(slurp("pis_cls.txt") == "2\n", "65 and 85 only");

    put("notprime.txt", "4\n");
    check(run("pis --set file:" + (scratch / "notprime.txt").string() +
              " --s 1 --x 10") == 2,
          "non-prime set entry exits 2");
}

void test_squareclass() {
    put("sq.qs", "QS1 modulus=5 prec=9\n1 1\n4 1\n9 1\n");
    int rc = run("squareclass --input " + (scratch / "sq.qs").string() +
                     " --ell 5",
                 "sq.txt");
    check(rc == 0, "squareclass exits 0");
    check(slurp("sq.txt") == "1\n", "square exponents give kernel set {1}");

    put("sq2.qs", "QS1 modulus=5 prec=3\n2 1\n3 1\n");
    run("squareclass --input " + (scratch / "sq2.qs").string() + " --ell 5",
        "sq2.txt");
    check(slurp("sq2.txt") == "2\n3\n", "kernels 2 and 3");
}

void test_probe() {
    conglab::QSeries delta = oracle::delta_mod(5, 10000);
    put("delta5.qs", conglab::serialize(delta));
    int rc = run("probe --input " + (scratch / "delta5.qs").string() +
                     " --weight int:12 --level 1 --scalar 2 --class 1,240 "
                     "--budget 50",
                 "probe.jsonl");
    check(rc == 0, "probe exits 0");
    std::string jsonl = slurp("probe.jsonl");
    check(!jsonl.empty(), "probe emits reports");

    // every line carries exactly the five schema fields, in order
    std::istringstream lines(jsonl);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        ++count;
        check(line.rfind("{\"p\":", 0) == 0, "line starts with p");
        check(line.find("\"class\":\"1,240\"") != std::string::npos,
              "class field present");
        check(line.find("\"scalar\":2") != std::string::npos,
              "scalar field present");
        check(line.find("\"precision\":") != std::string::npos,
              "precision field present");
        check(line.find("\"verdict\":") != std::string::npos,
              "verdict field present");
    }
    check(count >= 1, "at least one probe line");

    // vset mode: i = 0 verifies everything
    int rc2 = run("probe --input " + (scratch / "delta5.qs").string() +
                      " --weight int:12 --vset 1,0 --budget 5",
                  "probe_v.jsonl");
    check(rc2 == 0, "vset probe exits 0");
    std::string vlines = slurp("probe_v.jsonl");
    check(std::count(vlines.begin(), vlines.end(), '\n') == 5,
          "vset probes budget lines");
    check(vlines.find("\"verdict\":\"refuted\"") == std::string::npos,
          "i=0 never refutes");

    // precision exhaustion: tiny form, huge class primes
    put("tiny.qs", "QS1 modulus=5 prec=3\n1 1\n");
    check(run("probe --input " + (scratch / "tiny.qs").string() +
              " --weight half:1 --level 4 --scalar 2 --class 1,4") == 5,
          "probe precision exhaustion exits 5");
}

void test_mem_cap_env() {
    // the environment variable tightens the cap; a modest table then trips it
    std::string cmd = "CONGRUENCE_LAB_MEM_CAP=100 \"" + binary +
                      "\" census --sequence partition --modulus 5 --xmax 1000" +
                      " > /dev/null 2> /dev/null";
    int status = std::system(cmd.c_str());
    check(WIFEXITED(status) && WEXITSTATUS(status) == 4,
          "CONGRUENCE_LAB_MEM_CAP=100 makes xmax=1000 exit 4");

    std::string cmd2 = "CONGRUENCE_LAB_MEM_CAP=2000 \"" + binary +
                       "\" census --sequence partition --modulus 5 --xmax 1000" +
                       " > /dev/null 2> /dev/null";
    int status2 = std::system(cmd2.c_str());
    check(WIFEXITED(status2) && WEXITSTATUS(status2) == 0,
          "CONGRUENCE_LAB_MEM_CAP=2000 lets xmax=1000 run");
}

void test_determinism() {
    int a = run("census --sequence partition --modulus 7 --xmax 2000",
                "det_a.csv");
    int b = run("census --sequence partition --modulus 7 --xmax 2000",
                "det_b.csv");
    check(a == b, "determinism: same exit code");
    check(slurp("det_a.csv") == slurp("det_b.csv"),
          "determinism: byte-identical census output");

    run("probe --input " + (scratch / "delta5.qs").string() +
            " --weight int:12 --scalar 2 --class 1,240 --budget 20",
        "det_p1.jsonl");
    run("probe --input " + (scratch / "delta5.qs").string() +
            " --weight int:12 --scalar 2 --class 1,240 --budget 20",
        "det_p2.jsonl");
    check(slurp("det_p1.jsonl") == slurp("det_p2.jsonl"),
          "determinism: byte-identical probe output");
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cout << "FAIL usage: test_cli <binary>\n";
        return 1;
    }
    binary = argv[1];
    scratch = std::filesystem::temp_directory_path() / "conglab_cli_test";
    std::filesystem::create_directories(scratch);

    test_census();
    test_hecke();
    test_pis();
    test_squareclass();
    test_probe();
    test_mem_cap_env();
    test_determinism();

    if (failures == 0) {
        std::cout << "test_cli: all checks passed\n";
        return 0;
    }
    std::cout << "test_cli: " << failures << " checks failed\n";
    return 1;
}
