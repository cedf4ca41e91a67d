#include <gtest/gtest.h>

#include "setlab/cohomology/io.hpp"
#include "setlab/gcrossed/checks.hpp"
#include "setlab/gcrossed/export.hpp"

using namespace setlab;
using namespace setlab::gcrossed;

namespace {

const CheckOutcome& find(const std::vector<CheckOutcome>& all, const std::string& id) {
  for (const auto& c : all) {
    if (c.id == id) return c;
  }
  throw std::out_of_range(id);
}

SetCategoryData exported() { return export_model_data(HoneycombLattice::torus(2, 2)); }

SetCategoryData graded() { return read_data_file(SETLAB_DATA_DIR "/graded_example.json"); }

} // namespace

TEST(GCrossed, ExportedModelDataPasses) {
  const auto d = exported();
  for (const auto& c : run_all_checks(d)) {
    if (c.id == "twisted-braid") {
      EXPECT_EQ(c.status, Status::NotEvaluated);
    } else {
      EXPECT_EQ(c.status, Status::Pass) << c.id << ": " << to_json(c).dump();
      EXPECT_GT(c.instances, 0u);
    }
  }
  EXPECT_EQ(find(run_all_checks(d), "y-identity").instances, 4u * 4 * 4 * 4);
}

TEST(GCrossed, ExportedDataMatchesShippedFile) {
  const auto shipped = read_data_file(SETLAB_DATA_DIR "/toric_ccz_example.json");
  EXPECT_EQ(data_to_json(shipped), data_to_json(exported()));
}

TEST(GCrossed, GradedExamplePasses) {
  const auto d = graded();
  for (const auto& c : run_all_checks(d)) {
    if (c.id == "twisted-braid") continue;
    EXPECT_EQ(c.status, Status::Pass) << c.id << ": " << to_json(c).dump();
  }
}

TEST(GCrossed, BrokenBraidingIsCaughtWithWitness) {
  auto d = exported();
  d.anyons.braid[3][3] = Phase::one();
  const auto c = check_braid_bilinear(d);
  EXPECT_EQ(c.status, Status::Fail);
  ASSERT_TRUE(c.witness.is_object());
  EXPECT_NE(c.witness.at("lhs"), c.witness.at("rhs"));
  EXPECT_TRUE(c.witness.contains("law"));
}

TEST(GCrossed, PerturbedYFailsIdentity) {
  auto d = exported();
  (*d.y)[1][2][1] = (*d.y)[1][2][1] + Phase::minus_one();
  const auto c = check_y_identity(d);
  EXPECT_EQ(c.status, Status::Fail);
  EXPECT_TRUE(c.witness.contains("g"));
}

TEST(GCrossed, MissingYIsTakenAsOne) {
  auto d = graded();
  d.y.reset();
  EXPECT_EQ(check_y_identity(d).status, Status::Pass);
  // With y = 1 the identity reduces to fusion compatibility of omega.
  auto e = exported();
  e.y.reset();
  EXPECT_EQ(check_y_identity(e).pass(), check_fusion_compat(e).pass());
}

TEST(GCrossed, BadGradingAndActionFail) {
  auto d = graded();
  (*d.grading)[1] = 0;
  EXPECT_EQ(check_grading(d).status, Status::Fail);
  d.grading.reset();
  EXPECT_EQ(check_grading(d).status, Status::NotEvaluated);

  auto e = graded();
  e.theta[1][1] = 2;  // no longer a fusion automorphism, nor a bijection
  EXPECT_EQ(check_theta_action(e).status, Status::Fail);

  auto f = graded();
  f.omega.at(1, 1, 1) = Phase(1, 8);
  EXPECT_EQ(check_fusion_compat(f).status, Status::Fail);

  auto g = exported();
  g.theta[1] = {1, 3, 1, 3};  // eX -> f is not braid-covariant
  EXPECT_EQ(check_theta_covariance(g).status, Status::Fail);
}

TEST(GCrossed, TwistedBraidChecksWhenSupplied) {
  auto d = graded();
  PhaseMatrix e(4, std::vector<Phase>(2));
  for (std::size_t a = 0; a < 4; ++a) e[a][1] = Phase(static_cast<std::int64_t>(a), 4);
  d.twisted_braid = e;
  EXPECT_EQ(check_twisted_braid(d).status, Status::Pass);
  (*d.twisted_braid)[2][1] = Phase(1, 4);
  EXPECT_EQ(check_twisted_braid(d).status, Status::Fail);
}

TEST(GCrossed, JsonRoundTrip) {
  for (const auto& d : {exported(), graded()}) {
    const auto j = data_to_json(d);
    EXPECT_EQ(data_to_json(data_from_json(j)), j);
  }
}

TEST(GCrossed, SchemaErrors) {
  const auto j = data_to_json(graded());
  auto bad = j;
  bad["omega"].erase("2");
  EXPECT_THROW((void)data_from_json(bad), cohomology::SchemaError);
  bad = j;
  bad["fusion"][1][1] = "7";
  EXPECT_THROW((void)data_from_json(bad), cohomology::SchemaError);
  bad = j;
  bad["grading"]["1"] = 5;
  EXPECT_THROW((void)data_from_json(bad), cohomology::SchemaError);
  bad = j;
  bad["braid"][0] = {"0/1"};
  EXPECT_THROW((void)data_from_json(bad), cohomology::SchemaError);
  bad = j;
  bad["action"]["x"] = bad["action"]["1"];
  EXPECT_THROW((void)data_from_json(bad), cohomology::SchemaError);
  EXPECT_THROW((void)read_data_file(SETLAB_DATA_DIR "/does_not_exist.json"), cohomology::SchemaError);
}

TEST(GCrossed, FusionWithoutUnitIsRejected) {
  AbelianAnyonData a;
  a.labels = {"p", "q"};
  a.fusion = {{1, 1}, {1, 1}};
  EXPECT_THROW((void)a.unit(), InvalidData);
}
