#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "deplm/csv.hpp"
#include "deplm/errors.hpp"
#include "deplm/serialize.hpp"
#include "deplm/simulation.hpp"

using deplm::CsvTable;
using deplm::format_double;
using deplm::read_csv;

TEST_CASE("csv reading") {
  std::istringstream in("y,x1,x2\n1,2,3\n4.5,-1e-3,0\n");
  const CsvTable table = read_csv(in);
  CHECK(table.header.size() == 3);
  CHECK(table.rows() == 2);
  CHECK(table.column_index("x2") == 2);
  CHECK(table.column_index("nope") == -1);
  CHECK(table.columns[0][1] == doctest::Approx(4.5));
  CHECK(table.columns[1][1] == doctest::Approx(-1e-3));
}

TEST_CASE("csv rejects malformed input") {
  std::istringstream empty("");
  CHECK_THROWS_AS(read_csv(empty), deplm::MalformedInput);

  std::istringstream ragged("a,b\n1,2\n3\n");
  CHECK_THROWS_AS(read_csv(ragged), deplm::MalformedInput);

  std::istringstream text("a,b\n1,two\n");
  CHECK_THROWS_AS(read_csv(text), deplm::MalformedInput);

  std::istringstream header_only("a,b\n");
  CHECK_THROWS_AS(read_csv(header_only), deplm::MalformedInput);
}

TEST_CASE("csv handles crlf") {
  std::istringstream in("a,b\r\n1,2\r\n");
  const CsvTable table = read_csv(in);
  CHECK(table.header[1] == "b");
  CHECK(table.columns[1][0] == doctest::Approx(2.0));
}

TEST_CASE("format_double round-trips") {
  for (double v : {0.0, 1.0, -0.75, 6.25, 0.1, 1e-300, 3.141592653589793, -2.5e17}) {
    const std::string text = format_double(v);
    CHECK(std::stod(text) == v);
  }
  CHECK(format_double(5.0) == "5");
  CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("atomic write replaces content and leaves no temp files") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "deplm_io_test";
  fs::create_directories(dir);
  const fs::path target = dir / "out.csv";

  deplm::write_text_atomic(target, "first\n");
  deplm::write_text_atomic(target, "second\n");
  std::ifstream in(target);
  std::string line;
  std::getline(in, line);
  CHECK(line == "second");

  int entries = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    (void)entry;
    ++entries;
  }
  CHECK(entries == 1);
  fs::remove_all(dir);
}

TEST_CASE("autocovariance csv layout") {
  deplm::AutocovSequence acov;
  acov.n = 4;
  acov.values = {1.0, -0.75, 0.5, -0.25};
  CHECK(deplm::to_csv(acov) == "lag,acov\n0,1\n1,-0.75\n2,0.5\n3,-0.25\n");
}

TEST_CASE("covariance sidecar json fields") {
  deplm::CovarianceEstimate est;
  est.matrix = Eigen::Matrix2d::Identity();
  est.bandwidth = deplm::Bandwidth{6.25, 7};
  est.kernel_id = deplm::KernelId::bartlett;
  est.psd = true;
  est.n = 321;
  const auto parsed = nlohmann::json::parse(deplm::covariance_sidecar_json(est));
  CHECK(parsed["bandwidth"] == 6.25);
  CHECK(parsed["kept_lags"] == 7);
  CHECK(parsed["kernel"] == "bartlett");
  CHECK(parsed["psd"] == true);
  CHECK(parsed["n"] == 321);
  CHECK(parsed["p"] == 2);

  CHECK(deplm::to_csv_matrix(est.matrix) == "1,0\n0,1\n");
}

TEST_CASE("test result json fields") {
  deplm::CovarianceEstimate est;
  est.matrix = Eigen::Matrix2d::Identity();
  est.bandwidth = deplm::Bandwidth{5.0, 5};
  est.kernel_id = deplm::KernelId::paper;

  deplm::UnivariateTest t;
  t.coefficient_index = 1;
  t.statistic = 2.0;
  t.p_value = 0.0455;
  t.reject_at_5pct = true;
  auto tj = nlohmann::json::parse(deplm::to_json(t, est));
  CHECK(tj["index"] == 1);
  CHECK(tj["reject_at_5pct"] == true);
  CHECK(tj["bandwidth"] == 5.0);
  CHECK(tj["kernel"] == "paper");

  deplm::JointTest joint;
  joint.indices = {1, 2};
  joint.statistic = 5.99;
  joint.degrees = 2;
  joint.p_value = 0.05;
  auto jj = nlohmann::json::parse(deplm::to_json(joint, est));
  CHECK(jj["dof"] == 2);
  CHECK(jj["indices"] == nlohmann::json::array({1, 2}));
}

TEST_CASE("monte carlo csv layout") {
  deplm::MonteCarloResult result;
  result.model = deplm::ModelSpec::model1(0.0, 1000);
  result.config.bandwidth = 5.0;
  result.config.kernel = deplm::KernelId::paper;
  result.config.replications = 2000;
  result.rejections = 106;
  result.rejection_rate = 0.053;
  result.standard_error = 0.005;
  result.failures = 0;
  const std::string csv = deplm::to_csv(result);
  CHECK(csv ==
        "n,h,kernel,beta,N,rejection_rate,std_error,failures\n"
        "1000,5,paper,3;0,2000,0.053,0.005,0\n");

  result.config.bandwidth.reset();
  CHECK(deplm::to_csv(result).find(",auto,") != std::string::npos);
}
