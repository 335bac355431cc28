/*
   Copyright 2026 The qborel Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qborel/cli.hpp"

// Usage: golden_runner <case.cmd>. The first line of case.cmd is the expected
// exit code, each further line one argument; case.out holds the expected stdout.
int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: golden_runner <case.cmd>\n";
        return 2;
    }
    const std::string cmd_path = argv[1];
    std::ifstream cmd(cmd_path);
    if (!cmd) {
        std::cerr << "cannot read " << cmd_path << "\n";
        return 2;
    }
    std::string line;
    std::getline(cmd, line);
    const int expected_code = std::stoi(line);
    std::vector<std::string> args;
    while (std::getline(cmd, line))
        if (!line.empty()) args.push_back(line);

    const std::string out_path = cmd_path.substr(0, cmd_path.size() - 4) + ".out";
    std::ifstream golden(out_path);
    if (!golden) {
        std::cerr << "cannot read " << out_path << "\n";
        return 2;
    }
    std::stringstream expected;
    expected << golden.rdbuf();

    std::ostringstream out, err;
    const int code = qborel::run_cli(args, out, err);
    bool ok = true;
    if (code != expected_code) {
        std::cerr << "exit code " << code << ", expected " << expected_code << "\n" << err.str();
        ok = false;
    }
    if (out.str() != expected.str()) {
        std::cerr << "output differs from " << out_path << "\n--- expected\n"
                  << expected.str() << "--- got\n"
                  << out.str();
        ok = false;
    }
    return ok ? 0 : 1;
}
