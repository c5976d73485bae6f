#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

int run(const std::string& args)
{
    const std::string command = std::string("\"") + MORSIM_EXE + "\" " + args + " >/dev/null 2>&1";
    const int status = std::system(command.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

} // namespace

TEST_CASE("exit codes of the executable")
{
    const fs::path dir = fs::temp_directory_path() / ("morsim_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    std::ofstream(dir / "ok.cfg") << "Omega = 5\nG1 = 50\nalpha_l = 20\ndelta_min = -10\ndelta_max = 10\nsteps = 5\n";
    std::ofstream(dir / "bad.cfg") << "Omega = fifty\n";
    const std::string ok = (dir / "ok.cfg").string();

    CHECK(run("spectrum --config " + ok + " --out " + (dir / "o.csv").string()) == 0);
    CHECK(fs::exists(dir / "o.csv"));
    CHECK(run("spectrum --config " + ok + " --out /nonexistent/dir/o.csv") == 2);
    CHECK(run("spectrum --config " + (dir / "bad.cfg").string() + " --out " + (dir / "p.csv").string()) == 2);
    CHECK(run("enhancement --config " + ok + " --delta 0") == 0);
    CHECK(run("validate") == 0);
    CHECK(run("validate --flip-hamiltonian-sign") == 1);
    CHECK(run("no-such-command") == 2);
    CHECK(run("spectrum") == 2);

    fs::remove_all(dir);
}
