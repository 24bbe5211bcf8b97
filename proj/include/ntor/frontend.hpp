#pragma once

#include "ntor/manifest.hpp"

namespace ntor {

// Catalog selection shared by the CLI and the Python module. Strings use the CLI syntax:
// roots of unity "k/d", triples "a,b,k", monodromy "alpha,beta,gamma,delta".
struct CatalogArgs {
    std::string family;  // lens, seifert, torus-bundle, t3, trefoil
    std::string op;      // empty: the family's default operation
    long p = 0, q = 1;
    std::string field;
    std::string abk, lmn;
    std::string alpha, beta_root, gamma;
    int case_sign = 1;
    long beta = 2;
    std::string monodromy;
    std::string u = "1/8", v = "0/1";
};

// The catalog entry as a manifest; nullopt for catalog-only operations (torus-bundle volume).
std::optional<Manifest> catalog_manifest(const CatalogArgs& a);
json torus_volume_report(const CatalogArgs& a);

struct SweepArgs {
    std::string family;  // torus-bundle, seifert
    long beta = 2;
    long grid = 8;
    std::string abk, lmn;
    int case_sign = 1;
};
Table sweep_table(const SweepArgs& a);

}  // namespace ntor
