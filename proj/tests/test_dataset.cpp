#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include "mhc/cdi.hpp"
#include "mhc/dataset.hpp"
#include "mhc/io.hpp"

namespace fs = std::filesystem;
using namespace mhc;

namespace {

class DatasetFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("mhc_dataset_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& content) {
    const fs::path p = dir_ / name;
    std::ofstream(p, std::ios::binary) << content;
    return p;
  }

  fs::path dir_;
};

}  // namespace

TEST_F(DatasetFiles, LoadsTwoViewsWithoutLabels) {
  const std::vector<fs::path> views{write("a.csv", "1,0\n0,1\n1,1\n2,3\n"),
                                    write("b.csv", "1\t2\t3\n4\t5\t6\n7\t8\t9\n1\t0\t0\n")};
  const MultiViewDataset ds = load_dataset(views, std::nullopt);
  EXPECT_EQ(ds.num_samples(), 4u);
  EXPECT_EQ(ds.num_views(), 2u);
  EXPECT_FALSE(ds.labels().has_value());
  EXPECT_EQ(ds.view(1).cols(), 3);
  EXPECT_DOUBLE_EQ(ds.view(1)(2, 1), 8.0);
}

TEST_F(DatasetFiles, HeaderFlagSkipsFirstLineAndLabelsLoad) {
  const std::vector<fs::path> views{write("a.csv", "x,y\n1,0\r\n0,1\r\n\n3,4\n")};
  const MultiViewDataset ds =
      load_dataset(views, write("l.txt", "0\n1\n1\n"), LoadOptions{.header = true});
  EXPECT_EQ(ds.num_samples(), 3u);
  ASSERT_TRUE(ds.labels());
  EXPECT_EQ(*ds.labels(), (LabelVector{0, 1, 1}));
}

TEST_F(DatasetFiles, RowCountMismatchIsRejected) {
  const std::vector<fs::path> views{write("a.csv", "1\n2\n3\n4\n"), write("b.csv", "1\n2\n3\n4\n5\n")};
  try {
    load_dataset(views, std::nullopt);
    FAIL() << "expected a row-count error";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("row-count mismatch"), std::string::npos);
  }
}

TEST_F(DatasetFiles, NonNumericCellNamesFileRowAndColumn) {
  const fs::path bad = write("bad.csv", "1,2\n3,abc\n");
  try {
    read_view_file(bad);
    FAIL() << "expected a parse error";
  } catch (const ValidationError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("bad.csv"), std::string::npos);
    EXPECT_NE(msg.find("'abc'"), std::string::npos);
    EXPECT_NE(msg.find("row 2"), std::string::npos);
    EXPECT_NE(msg.find("column 2"), std::string::npos);
  }
}

TEST_F(DatasetFiles, EmptyRaggedZeroAndMissingFiles) {
  EXPECT_THROW(read_view_file(write("e.csv", "\n\n")), ValidationError);
  EXPECT_THROW(read_view_file(write("r.csv", "1,2\n3\n")), ValidationError);
  EXPECT_THROW(read_view_file(write("nan.csv", "1,nan\n3,4\n")), ValidationError);
  try {
    read_view_file(write("z.csv", "1,2\n0,0\n"));
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("row 2"), std::string::npos);
  }
  EXPECT_THROW(read_view_file(dir_ / "missing.csv"), IoError);
}

TEST_F(DatasetFiles, LabelValidation) {
  const std::vector<fs::path> views{write("a.csv", "1\n2\n3\n")};
  EXPECT_THROW(load_dataset(views, write("short.txt", "0\n1\n")), ValidationError);
  EXPECT_THROW(read_label_file(write("neg.txt", "0\n-1\n")), ValidationError);
  EXPECT_THROW(read_label_file(write("frac.txt", "0\n1.5\n")), ValidationError);
}

TEST_F(DatasetFiles, IdenticalBytesGiveIdenticalDatasets) {
  const std::string text = "0.1,2e-3\n-4.5,1\n7,8\n";
  const std::vector<fs::path> a{write("a.csv", text)};
  const std::vector<fs::path> b{write("b.csv", text)};
  EXPECT_TRUE(load_dataset(a, std::nullopt) == load_dataset(b, std::nullopt));
}

TEST_F(DatasetFiles, WrittenViewsReadBackExactly) {
  SyntheticSpec spec;
  spec.n = 20;
  const MultiViewDataset ds = generate_synthetic(spec);
  const fs::path p = dir_ / "v.csv";
  write_view_file(p, ds.view(1));
  const Matrix back = read_view_file(p);
  EXPECT_TRUE(back == ds.view(1));
  EXPECT_FALSE(fs::exists(dir_ / "v.csv.tmp"));
}

TEST(Dataset, ConstructorInvariants) {
  EXPECT_THROW(MultiViewDataset({}), ValidationError);
  EXPECT_THROW(MultiViewDataset({Matrix::Ones(1, 2)}), ValidationError);
  EXPECT_THROW(MultiViewDataset({Matrix::Ones(3, 2), Matrix::Ones(4, 2)}), ValidationError);
  EXPECT_THROW(MultiViewDataset({Matrix::Ones(3, 0)}), ValidationError);
  Matrix zero_row = Matrix::Ones(3, 2);
  zero_row.row(1).setZero();
  EXPECT_THROW(MultiViewDataset({zero_row}), ValidationError);
  EXPECT_THROW(MultiViewDataset({Matrix::Ones(3, 2)}, LabelVector{0, 1}), ValidationError);
  EXPECT_NO_THROW(MultiViewDataset({Matrix::Ones(3, 2)}, LabelVector{0, 1, 5}));
}

TEST(Synthetic, SmallNoiselessSpecHasBalancedLabels) {
  SyntheticSpec spec{.n = 6, .views = 2, .clusters = 3, .dims = {4, 5}, .separation = 5.0, .noise = 0.0, .seed = 7};
  const MultiViewDataset ds = generate_synthetic(spec);
  ASSERT_TRUE(ds.labels());
  std::map<Label, int> counts;
  for (Label l : *ds.labels()) ++counts[l];
  EXPECT_EQ(counts.size(), 3u);
  for (auto [label, count] : counts) EXPECT_EQ(count, 2) << "label " << label;
  EXPECT_EQ(ds.view(0).cols(), 4);
  EXPECT_EQ(ds.view(1).cols(), 5);
}

TEST(Synthetic, DeterministicPerSeed) {
  SyntheticSpec spec;
  spec.n = 50;
  EXPECT_TRUE(generate_synthetic(spec) == generate_synthetic(spec));
  SyntheticSpec other = spec;
  other.seed = 2;
  EXPECT_FALSE(generate_synthetic(spec) == generate_synthetic(other));
}

TEST(Synthetic, NoiselessClustersHaveZeroWithinClusterDistance) {
  SyntheticSpec spec{.n = 30, .views = 3, .clusters = 4, .dims = {6}, .separation = 0.7, .noise = 0.0, .seed = 3};
  const MultiViewDataset ds = generate_synthetic(spec);
  const auto& labels = *ds.labels();
  for (const Matrix& view : ds.views()) {
    const DistanceMatrix d = view_distance_matrix(view);
    for (std::size_t a = 0; a < ds.num_samples(); ++a) {
      for (std::size_t b = a + 1; b < ds.num_samples(); ++b) {
        if (labels[a] == labels[b]) {
          EXPECT_NEAR(d(a, b), 0.0, 1e-12);
        } else {
          EXPECT_GT(d(a, b), 0.1);
        }
      }
    }
  }
}

TEST(Synthetic, CentreDistanceGrowsWithSeparation) {
  // With orthonormal offsets the centre distance is s^2 / (1 + s^2).
  for (double s : {0.25, 1.0, 3.0}) {
    SyntheticSpec spec{.n = 4, .views = 1, .clusters = 2, .dims = {8}, .separation = s, .noise = 0.0, .seed = 11};
    const MultiViewDataset ds = generate_synthetic(spec);
    const auto& labels = *ds.labels();
    const DistanceMatrix d = view_distance_matrix(ds.view(0));
    for (std::size_t a = 0; a < 4; ++a) {
      for (std::size_t b = a + 1; b < 4; ++b) {
        if (labels[a] != labels[b]) { EXPECT_NEAR(d(a, b), s * s / (1 + s * s), 1e-12); }
      }
    }
  }
}

TEST(Synthetic, InvalidSpecsAreRejected) {
  EXPECT_THROW(generate_synthetic({.n = 5, .clusters = 6}), ValidationError);
  EXPECT_THROW(generate_synthetic({.n = 5, .views = 2, .clusters = 2, .dims = {1}}), ValidationError);
  EXPECT_THROW(generate_synthetic({.n = 5, .views = 3, .clusters = 2, .dims = {4, 4}}), ValidationError);
  EXPECT_THROW(generate_synthetic({.n = 5, .clusters = 2, .dims = {4}, .noise = -1.0}), ValidationError);
}
