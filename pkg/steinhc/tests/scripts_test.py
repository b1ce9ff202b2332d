import unittest
import contextlib
import io
import json
import os
import tempfile

from steinhc.scripts import run
from steinhc.core import EXIT_OK, EXIT_FAILED, EXIT_INVALID

SPHERE = {
    'kind': 'stein',
    'payload': {
        'n': 3,
        'morse': {'real_dimension': 4, 'points': [{'id': 'p', 'index': 0}]},
    },
}

PAIR = {
    'kind': 'stein',
    'payload': {
        'n': 3,
        'morse': {
            'real_dimension': 4,
            'points': [{'id': 'p', 'index': 0}, {'id': 'q', 'index': 1}],
            'differential': [{'from': 'q', 'to': 'p', 'coefficient': '0'}],
        },
        'cochains': [
            {'generator': 'p', 'multiplicity': 3, 'cochain': {'p': '1/2'}},
        ],
        'correlators': [
            {'cup_value': '3/4', 'simple_minimum': True, 'deg1': 2,
             'deg2': 0, 'num_marked': 2},
            {'cup_value': 5, 'simple_minimum': True, 'deg1': 2,
             'deg2': 2, 'num_marked': 3},
        ],
    },
}

HANDLE = {
    'kind': 'handle',
    'payload': {'n': 3, 'k': 0, 'a': [1.0, 1.4142135623730951, 100.0],
                'c': 1.0},
}

CP2 = {
    'kind': 'prequant',
    'payload': {'sigma_real_dim': 4, 'betti': [1, 0, 1, 0, 1], 'c': 3, 'k': 1},
}

CP3 = {
    'kind': 'polarization',
    'payload': {'n': 3, 'a': [1], 'b': [1, 0, 1, 0, 1], 'k': 1, 'c': 3},
}


class TestCommands(unittest.TestCase):
    """
    Runs the steinhc command on small input files and checks output and
    exit codes
    """

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tmp.cleanup()

    def write(self, obj, name='input.json'):
        path = os.path.join(self.tmp.name, name)
        with open(path, 'w') as fout:
            if isinstance(obj, str):
                fout.write(obj)
            else:
                json.dump(obj, fout)
        return path

    def steinhc(self, *args):
        out, err = io.StringIO(), io.StringIO()
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            code = run(['steinhc'] + list(args))
        return code, out.getvalue(), err.getvalue()

    def test_cyl_hc_json(self):
        path = self.write(SPHERE)
        code, out, err = self.steinhc('cyl-hc', '--input', path, '--cutoff',
                                      '10', '--format', 'json')
        self.assertEqual(code, EXIT_OK, err)
        obj = json.loads(out)
        self.assertEqual(obj['ranks'], {'4': 1, '6': 1, '8': 1, '10': 1})
        self.assertTrue(obj['yau_isomorphism'])

    def test_cyl_hc_table(self):
        path = self.write(SPHERE)
        code, out, err = self.steinhc('cyl-hc', '--input', path, '--cutoff',
                                      '8')
        self.assertEqual(code, EXIT_OK, err)
        self.assertIn('shift check: PASS', out)

    def test_cyl_hc_csv(self):
        path = self.write(SPHERE)
        code, out, err = self.steinhc('cyl-hc', '--input', path, '--cutoff',
                                      '6', '--format', 'csv')
        self.assertEqual(code, EXIT_OK, err)
        self.assertEqual(out.split('\n')[:3], ['degree,rank', '4,1', '6,1'])

    def test_full_hc(self):
        path = self.write(SPHERE)
        code, out, err = self.steinhc('full-hc', '--input', path, '--cutoff',
                                      '8', '--format', 'json')
        self.assertEqual(code, EXIT_OK, err)
        self.assertEqual(json.loads(out)['coefficients'],
                         [1, 0, 0, 0, 1, 0, 1, 0, 2])

    def test_cz_index(self):
        path = self.write(PAIR)
        code, out, err = self.steinhc('cz-index', '--input', path,
                                      '--cutoff', '6', '--format', 'json')
        self.assertEqual(code, EXIT_OK, err)
        obj = json.loads(out)
        self.assertEqual([row['degree'] for row in obj['generators']],
                         [3, 4, 5, 6])
        self.assertTrue(obj['well_definedness']['passed'])

    def test_pairing(self):
        path = self.write(PAIR)
        code, out, err = self.steinhc('pairing', '--input', path,
                                      '--m-max', '3', '--format', 'json')
        self.assertEqual(code, EXIT_OK, err)
        canonical, cochains, correlators = json.loads(out)
        self.assertEqual(len(canonical['rows']), 6)
        self.assertEqual(cochains['rows'][0]['descendant'], '1/4')
        self.assertEqual([row['value'] for row in correlators['rows']],
                         ['3/4', '0'])

    def test_reeb_verify(self):
        path = self.write(HANDLE)
        code, out, err = self.steinhc('reeb-verify', '--input', path,
                                      '--m-max', '5', '--format', 'json')
        self.assertEqual(code, EXIT_OK, err)
        rows = json.loads(out)['rows']
        self.assertEqual([row['cz_numeric'] for row in rows],
                         [4, 6, 8, 10, 12])

    def test_reeb_condition(self):
        path = self.write({
            'kind': 'handle',
            'payload': {'n': 3, 'k': 0, 'a': [1.0, 1.5, 2.0], 'c': 1.0},
        })
        code, out, err = self.steinhc('reeb-verify', '--input', path,
                                      '--m-max', '5')
        self.assertEqual(code, EXIT_INVALID)
        self.assertIn('ConditionNotMet', err)

    def test_reeb_trajectory(self):
        path = self.write(HANDLE)
        code, out, err = self.steinhc('reeb-verify', '--input', path,
                                      '--trajectory', '0.125', '--dt',
                                      '0.015625', '--plane', '1',
                                      '--format', 'csv')
        self.assertEqual(code, EXIT_OK, err)
        lines = [line for line in out.split('\n') if line]
        self.assertEqual(lines[0], 't,x_1,y_1,x_2,y_2,x_3,y_3,phi')
        self.assertEqual(len(lines), 10)
        self.assertEqual(float(lines[-1].split(',')[0]), 0.125)

        code, out, err = self.steinhc('reeb-verify', '--input', path,
                                      '--trajectory', '0.125', '--dt',
                                      '0.015625', '--plane', '1',
                                      '--format', 'json')
        self.assertEqual(code, EXIT_OK, err)
        obj = json.loads(out)
        self.assertEqual(len(obj['rows']), 9)
        self.assertLess(obj['max_drift'], 1e-6)
        self.assertAlmostEqual(obj['min_margin'], 1., delta=1e-6)

        code, out, err = self.steinhc('reeb-verify', '--input', path,
                                      '--trajectory', '0.125', '--dt',
                                      '0.015625', '--plane', '1')
        self.assertEqual(code, EXIT_OK, err)
        self.assertIn('min Liouville margin', out)

    def test_reeb_return_time(self):
        path = self.write(HANDLE)
        code, out, err = self.steinhc('reeb-verify', '--input', path,
                                      '--return-time', '--dt', '1e-5',
                                      '--format', 'json')
        self.assertEqual(code, EXIT_OK, err)
        row = json.loads(out)['rows'][0]
        self.assertEqual(row['plane'], 3)
        self.assertAlmostEqual(row['expected'], 0.031415926535897934)
        self.assertTrue(row['ok'])

    def test_prequant(self):
        path = self.write(CP2)
        code, out, err = self.steinhc('prequant-hc', '--input', path,
                                      '--cutoff', '9', '--format', 'json')
        self.assertEqual(code, EXIT_OK, err)
        self.assertEqual(json.loads(out)['ranks'], {'4': 1, '6': 1, '8': 1})

    def test_polarization(self):
        path = self.write(CP3)
        code, out, err = self.steinhc('polarization-check', '--input', path)
        self.assertEqual(code, EXIT_OK, err)

        bad = json.loads(json.dumps(CP3))
        bad['payload']['b'][1] = 1
        path = self.write(bad, 'bad.json')
        code, out, err = self.steinhc('polarization-check', '--input', path,
                                      '--format', 'json')
        self.assertEqual(code, EXIT_FAILED)
        self.assertFalse(json.loads(out)['passed'])

    def test_polarization_solved(self):
        obj = json.loads(json.dumps(CP3))
        del obj['payload']['b']
        path = self.write(obj)
        code, out, err = self.steinhc('polarization-check', '--input', path)
        self.assertEqual(code, EXIT_OK, err)
        self.assertTrue(out.startswith('Betti numbers of Sigma solved from a'))

        code, out, err = self.steinhc('polarization-check', '--input', path,
                                      '--format', 'json')
        self.assertEqual(code, EXIT_OK, err)
        obj = json.loads(out)
        self.assertEqual(obj['solved_b'], [1, 0, 1, 0, 1])
        self.assertTrue(obj['passed'])

        # with b given nothing is solved
        path = self.write(CP3, 'given.json')
        code, out, err = self.steinhc('polarization-check', '--input', path,
                                      '--format', 'json')
        self.assertNotIn('solved_b', json.loads(out))

    def test_cross_check(self):
        obj = json.loads(json.dumps(CP3))
        del obj['payload']['c']
        path = self.write(obj)
        code, out, err = self.steinhc('cross-check', '--input', path,
                                      '--cutoff', '40')
        self.assertEqual(code, EXIT_OK, err)

        obj['payload']['c'] = 2
        path = self.write(obj, 'wrong.json')
        code, out, err = self.steinhc('cross-check', '--input', path,
                                      '--cutoff', '40', '--format', 'json')
        self.assertEqual(code, EXIT_FAILED)
        self.assertEqual(json.loads(out)['extras']['first_disagreement'], '2')


class TestErrors(unittest.TestCase):
    """
    Invalid input gives exit code 2 and a message on stderr
    """

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tmp.cleanup()

    write = TestCommands.write
    steinhc = TestCommands.steinhc

    def test_schema_path(self):
        obj = json.loads(json.dumps(SPHERE))
        obj['payload']['morse']['points'][0]['index'] = -1
        path = self.write(obj)
        code, out, err = self.steinhc('cyl-hc', '--input', path, '--cutoff',
                                      '10')
        self.assertEqual(code, EXIT_INVALID)
        self.assertIn('$.payload.morse.points[0].index', err)
        self.assertEqual(out, '')

    def test_wrong_kind(self):
        path = self.write(CP2)
        code, out, err = self.steinhc('cyl-hc', '--input', path, '--cutoff',
                                      '10')
        self.assertEqual(code, EXIT_INVALID)
        self.assertIn('$.kind', err)

    def test_bad_json(self):
        path = self.write('{"kind": ')
        code, out, err = self.steinhc('full-hc', '--input', path, '--cutoff',
                                      '4')
        self.assertEqual(code, EXIT_INVALID)
        self.assertIn('SchemaError', err)

    def test_missing_file(self):
        code, out, err = self.steinhc(
            'full-hc', '--input', os.path.join(self.tmp.name, 'none.json'),
            '--cutoff', '4'
        )
        self.assertEqual(code, EXIT_INVALID)

    def test_subcritical(self):
        obj = json.loads(json.dumps(SPHERE))
        obj['payload']['morse']['points'].append({'id': 's', 'index': 3})
        path = self.write(obj)
        code, out, err = self.steinhc('cyl-hc', '--input', path, '--cutoff',
                                      '10')
        self.assertEqual(code, EXIT_INVALID)
        self.assertIn('SubcriticalityViolation', err)

    def test_usage(self):
        self.assertEqual(self.steinhc()[0], EXIT_INVALID)
        code, out, err = self.steinhc('frobnicate')
        self.assertEqual(code, EXIT_INVALID)
        self.assertIn('unknown command', err)
        code, out, err = self.steinhc('--help')
        self.assertEqual(code, EXIT_OK)
        self.assertIn('cross-check', out)

    def test_missing_flag(self):
        path = self.write(SPHERE)
        code, out, err = self.steinhc('cyl-hc', '--input', path)
        self.assertEqual(code, EXIT_INVALID)

    def test_reeb_modes(self):
        path = self.write(HANDLE)
        code, out, err = self.steinhc('reeb-verify', '--input', path)
        self.assertEqual(code, EXIT_INVALID)
        self.assertIn('--m-max', err)
        code, out, err = self.steinhc('reeb-verify', '--input', path,
                                      '--return-time', '--trajectory', '1')
        self.assertEqual(code, EXIT_INVALID)
        code, out, err = self.steinhc('reeb-verify', '--input', path,
                                      '--return-time', '--plane', '4')
        self.assertEqual(code, EXIT_INVALID)

    def test_unsolvable_betti(self):
        path = self.write({
            'kind': 'polarization', 'payload': {'n': 4, 'a': [1, 0, 2]},
        })
        code, out, err = self.steinhc('polarization-check', '--input', path)
        self.assertEqual(code, EXIT_INVALID)
        self.assertIn('Unsolvable', err)

    def test_bad_format(self):
        path = self.write(SPHERE)
        code, out, err = self.steinhc('cyl-hc', '--input', path, '--cutoff',
                                      '4', '--format', 'xml')
        self.assertEqual(code, EXIT_INVALID)


if __name__ == '__main__':
    unittest.main()
