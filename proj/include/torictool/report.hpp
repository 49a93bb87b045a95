#pragma once

#include "torictool/textio.hpp"
#include "torictool/toric.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>

namespace torictool {

// exit codes: 1 parse error, 2 precondition violation, 3 precision failure
struct ToolError : std::runtime_error {
    int code;
    std::string kind;
    ToolError(int c, std::string k, const std::string &msg)
        : std::runtime_error(msg), code(c), kind(std::move(k)) {}
};

struct RunOptions {
    Int max_degree = 6;
    long precision = 256;
    bool strict = false;
    std::optional<Int> comin_bound;
    int coordinate = 0;                 // resonances: 0 = all coordinates
    std::string time = "1";             // flow
    std::string theta;                  // check-commute: columns 'a,b,c;d,e,f'
    bool diagonalizable = true;
    std::map<std::string, std::string> symbol_values;
};

// command in {analyze, resonances, classify, simplify, normalize, flow, check-commute};
// primary: main input file text; phases: optional phase file for phase-linked germs
nlohmann::ordered_json run_command(const std::string &command, const std::string &primary,
                                   const std::optional<std::string> &phases, const RunOptions &opts);

} // namespace torictool
