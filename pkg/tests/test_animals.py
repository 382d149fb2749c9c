import pytest

from polyheap import paths
from polyheap.animals import (
    Animal,
    NotAnAnimal,
    animal_to_heap,
    enumerate_directed_animals,
    heap_to_animal,
    is_directed,
    is_stacked_directed,
)
from polyheap.bijection import phi_inv
from polyheap.heaps import Heap, HeapError, refall
from polyheap.paths import Mode

DIRECTED_COUNTS = [1, 2, 5, 13, 35, 96, 267, 750]


def test_animal_canonical_form_and_connectivity():
    a = Animal([(3, 4), (4, 4)])
    assert a.cells == ((0, 0), (1, 0))
    with pytest.raises(NotAnAnimal):
        Animal([(0, 0), (2, 0)])  # not 4-connected
    with pytest.raises(NotAnAnimal):
        Animal([])


def test_single_cell_roundtrip():
    a = Animal([(0, 0)])
    assert animal_to_heap(a) == Heap([(0, 0)])
    assert heap_to_animal(Heap([(0, 0)])) == a


def test_worked_example_uc():
    h = phi_inv("UC")
    a = heap_to_animal(h)
    assert a == Animal([(0, 0), (0, 1), (-1, 1)])
    assert animal_to_heap(a) == h


def test_animal_heap_roundtrip_on_directed_animals():
    for size in range(1, 8):
        count = 0
        for a in enumerate_directed_animals(size):
            count += 1
            h = animal_to_heap(a)
            assert len(h) == size
            assert heap_to_animal(h) == a
        assert count == DIRECTED_COUNTS[size - 1]


def test_heap_animal_roundtrip_on_stacked_heaps(cat_paths_by_length):
    for n in range(9):
        for p in cat_paths_by_length[n]:
            h = phi_inv(p)
            a = heap_to_animal(h)
            assert len(a.cells) == len(h)
            assert animal_to_heap(a) == h


def test_is_directed():
    assert is_directed(Animal([(0, 0), (1, 0), (0, 1)]))
    # L-shape reachable only by going south: not directed from its corner
    assert not is_directed(Animal([(0, 1), (1, 1), (1, 0)]))


def test_is_stacked_directed_matches_bijection_images(cat_paths_by_length):
    images = {heap_to_animal(phi_inv(p)) for p in cat_paths_by_length[4]}
    for a in enumerate_directed_animals(5):
        assert is_stacked_directed(a) == (a in images)


def test_directed_implies_animal_heap_is_valid():
    for a in enumerate_directed_animals(6):
        h = animal_to_heap(a)
        assert len(h) == 6


def test_heap_to_animal_requires_strict_connected():
    with pytest.raises(HeapError):
        heap_to_animal(refall([(0, 0), (0, 1)]))  # not strict
    with pytest.raises(HeapError):
        heap_to_animal(Heap([(0, 0), (3, 0)]))  # not connected


def test_json_roundtrip():
    a = Animal([(0, 0), (0, 1), (1, 1)])
    assert Animal.from_json(a.to_json()) == a
