#include "scomp/engines.hpp"

#include <stdexcept>

#include "scomp/closedforms.hpp"
#include "scomp/diophantine.hpp"
#include "scomp/errors.hpp"
#include "scomp/oracle.hpp"

namespace scomp {

std::string engine_name(Engine e) {
    switch (e) {
        case Engine::Brute: return "brute";
        case Engine::Dio: return "dio";
        case Engine::Dp1: return "dp1";
        case Engine::Dp2: return "dp2";
        case Engine::Closed: return "closed";
        case Engine::Auto: return "auto";
    }
    return "?";
}

std::optional<Engine> parse_engine(const std::string& name) {
    for (Engine e : {Engine::Brute, Engine::Dio, Engine::Dp1, Engine::Dp2, Engine::Closed,
                     Engine::Auto})
        if (engine_name(e) == name) return e;
    return std::nullopt;
}

BigInt count_via_first(const PartSet& s, int n) {
    if (n == 0) return 1;
    if (materialize(s, n).empty()) return 0;
    return eval_dp(first_interpreter(s, n), n);
}

BigInt count_via_second(const PartSet& s, int n) {
    if (n == 0) return 1;
    if (n == 1) return contains(s, 1, 1) ? 1 : 0;
    if (materialize(s, n).empty()) return 0;
    return eval_dp(second_interpreter(s, n), n);
}

bool engine_supports(Engine engine, const PartSet& s, int n) {
    switch (engine) {
        case Engine::Brute:
        case Engine::Dp1:
        case Engine::Auto:
            return true;
        case Engine::Dio:
            return s.finite();
        case Engine::Dp2:
            return n <= 1 || materialize(s, n).empty() || second_interpreter_supported(s, n);
        case Engine::Closed:
            return classify_family(s).has_value();
    }
    return false;
}

Engine resolve_auto(const PartSet& s, int n) {
    if (classify_family(s)) return Engine::Closed;
    if (n >= 1 && !materialize(s, n).empty()) {
        InterpreterChoice choice = choose_interpreter(s, n);
        return choice.which == InterpreterKind::Second ? Engine::Dp2 : Engine::Dp1;
    }
    return Engine::Dp1;  // trivial: n = 0 or no usable part
}

BigInt count_with_engine(const PartSet& s, int n, Engine engine) {
    if (n < 0) throw std::invalid_argument("count: n must be >= 0");
    if (engine == Engine::Auto) engine = resolve_auto(s, n);
    if (!engine_supports(engine, s, n))
        throw unsupported_error("engine '" + engine_name(engine) + "' does not support the set " +
                                s.to_spec() + " at n=" + std::to_string(n));
    switch (engine) {
        case Engine::Brute: return count_brute(s, n);
        case Engine::Dio: return direct_count(s, n);
        case Engine::Dp1: return count_via_first(s, n);
        case Engine::Dp2: return count_via_second(s, n);
        case Engine::Closed: return count_closed(s, n);
        case Engine::Auto: break;
    }
    throw std::logic_error("unreachable");
}

}  // namespace scomp
