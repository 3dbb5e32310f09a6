import io

import numpy as np
import pytest

from geepress.data import Cluster, LongitudinalDataset, read_long_csv, write_long_csv
from geepress.exceptions import InputError

GOOD = "id,time,y,x1,x2\n1,0,1,0.5,1\n1,2,0,0.5,0\n2,0,0,1.5,1\n2,5,1,1.5,1\n2,7,1,1.5,0\n"


def test_read_valid_csv():
    data = read_long_csv(io.StringIO(GOOD), "binary")
    assert data.n_clusters == 2
    assert data.p == 2
    assert data.n_obs == 5
    assert data.wave_grid == (0.0, 2.0, 5.0, 7.0)
    assert data.columns == ("x1", "x2")
    np.testing.assert_array_equal(data.clusters[1].waves, [0, 5, 7])


def test_round_trip(tmp_path):
    data = read_long_csv(io.StringIO(GOOD), "binary")
    path = tmp_path / "d.csv"
    write_long_csv(data, path)
    raw = path.read_bytes()
    assert raw.startswith(b"id,time,y,x1,x2\r\n")
    again = read_long_csv(path, "binary")
    for a, b in zip(data.clusters, again.clusters):
        np.testing.assert_array_equal(a.X, b.X)
        np.testing.assert_array_equal(a.y, b.y)


@pytest.mark.parametrize("text,needle", [
    ("id,time,y,x1\n1,0,1,0\n1,0,0,1\n", "line 3"),
    ("id,time,y,x1\n1,2,1,0\n1,1,0,1\n", "within id 1"),
    ("id,time,y,x1\n1,0,1,0\n2,0,0,1\n1,1,0,1\n", "not grouped"),
    ("id,time,y,x1\n1,0,1,\n", "missing cell"),
    ("id,time,y,x1\n1,0,2,0\n", "binary response"),
    ("id,time,y,x1\n1,-1,1,0\n", "time must be >= 0"),
    ("id,time,resp,x1\n1,0,1,0\n", "header"),
    ("id,time,y,x1\n1,0,1,abc\n", "non-numeric"),
])
def test_schema_violations(text, needle):
    with pytest.raises(InputError, match=needle):
        read_long_csv(io.StringIO(text), "binary")


def test_poisson_response_validation():
    with pytest.raises(InputError, match="non-negative integer"):
        read_long_csv(io.StringIO("id,time,y,x1\n1,0,2.5,0\n"), "poisson")


def test_cluster_validation():
    with pytest.raises(InputError):
        Cluster(1, [1.0, 0.0], np.ones((3, 1)), [1, 2])
    with pytest.raises(InputError):
        Cluster(1, [1.0, 0.0], np.ones((2, 1)), [2, 1])
    with pytest.raises(InputError):
        Cluster(1, [1.0, np.nan], np.ones((2, 1)), [1, 2])


def test_dataset_invariants():
    c1 = Cluster(1, [1.0], [[1.0, 2.0]], [0])
    with pytest.raises(InputError, match="exceed p"):
        LongitudinalDataset((c1,))
    c2 = Cluster(2, [1.0, 0.0], [[1.0], [2.0]], [0, 1])
    with pytest.raises(InputError, match="covariates"):
        LongitudinalDataset((c1, c2))


def test_patterns_group_by_waves(binary_unbalanced):
    blocks = binary_unbalanced.patterns
    assert sum(len(b.index) for b in blocks) == binary_unbalanced.n_clusters
    for b in blocks:
        for g, i in enumerate(b.index):
            c = binary_unbalanced.clusters[i]
            np.testing.assert_array_equal(c.waves, b.waves)
            np.testing.assert_array_equal(c.X, b.X[g])


def test_from_long_and_helpers():
    y = np.array([1, 0, 1, 1, 0.0])
    X = np.arange(10.0).reshape(5, 2)
    data = LongitudinalDataset.from_long(y, X, ["a", "a", "b", "b", "b"])
    assert [c.n for c in data.clusters] == [2, 3]
    assert data.add_intercept().p == 3
    assert data.without(0).n_clusters == 1
    with pytest.raises(InputError, match="contiguous"):
        LongitudinalDataset.from_long(y, X, ["a", "b", "a", "b", "b"])
    ids, t, yy, XX = data.long_arrays()
    np.testing.assert_array_equal(yy, y)
