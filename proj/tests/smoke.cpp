#include <iostream>

#include "hurwitz/oracles.hpp"
#include "hurwitz/tropical.hpp"

using namespace hurwitz;

int main() {
    std::vector<std::pair<std::string, WeightFunction>> weights = {
        {"exp", WeightFunction::exp_weight()},
        {"mono", WeightFunction::product_gtilde_weight({Rat(1)})},
        {"strict", WeightFunction::product_g_weight({Rat(1)})},
    };
    int fails = 0, cases = 0;
    for (int d = 1; d <= 4; ++d) {
        auto parts = partitions_of(d);
        for (const auto& mu : parts)
            for (const auto& nu : parts)
                for (int r = 0; r <= 4; ++r) {
                    if ((r - mu.length() - nu.length()) % 2 != 0) continue;
                    auto brute = brute_force_double_classical(mu, nu, r);
                    for (auto& [name, w] : weights) {
                        ++cases;
                        Rat c = char_double_disconnected(w, mu, nu, r);
                        Rat g = brute_force_double_weighted(w, mu, nu, r);
                        Rat t = tropical_double(w, mu, nu, r, false);
                        Rat cc = connected_double(w, mu, nu, r);
                        Rat tc = tropical_double(w, mu, nu, r, true);
                        bool ok = (c == g) && (c == t) && (cc == tc);
                        if (name == "exp") ok = ok && (c == brute.disconnected) && (cc == brute.connected);
                        if (!ok) {
                            ++fails;
                            std::cout << "MISMATCH " << name << " mu=" << partition_to_string(mu)
                                      << " nu=" << partition_to_string(nu) << " r=" << r
                                      << "  char=" << rat_to_string(c) << " gp=" << rat_to_string(g)
                                      << " trop=" << rat_to_string(t)
                                      << " conn=" << rat_to_string(cc) << " tropconn=" << rat_to_string(tc);
                            if (name == "exp")
                                std::cout << " bruteD=" << rat_to_string(brute.disconnected)
                                          << " bruteC=" << rat_to_string(brute.connected);
                            std::cout << "\n";
                        }
                    }
                }
    }
    std::cout << "cases=" << cases << " fails=" << fails << "\n";
    return fails ? 1 : 0;
}
