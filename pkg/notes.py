# for uploading to PyPi

# To build
# python setup.py sdist bdist_wheel

# to upload
# twine upload --repository-url https://upload.pypi.org/legacy/ dist/*

# =============================================================================
# for running pytest coverage report
# py.test --cov-report html --cov metaice
# htmlcov\index.html
# or,
# pytest --cov-report html --cov=metaice tests\metaice\

# the functional grids take much longer than the unit tests
# pytest tests\functional

# =============================================================================
# Creating an annotated git tag
# git tag -a v0.1.0 -m "v0.1.0"

# And when pushing, tags are not automatically included. To include tags, run
# git push origin --tags

# =============================================================================
# Building documentation
# cd docs
# make html
